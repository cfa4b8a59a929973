def modular_exponential(base, power, mod):
    if power < 0:
        return -1
    base %= mod
    result = 1
    while power > 0:
        if power & 1:
            result = (result * base) % mod
        power = power >> 1
        base = (base * base) % mod
    return result


print(modular_exponential(5, 0, 10))
print(modular_exponential(2, 8, 7))
print(modular_exponential(3, -2, 9))
print(modular_exponential(7, 10**18, 1_000_000_007) == pow(7, 10**18, 1_000_000_007))
