def power(base, exponent):
    return base * power(base, (exponent - 1)) if exponent else 1


print(power(3, 4))
print(power(2, 0))
print(power(2, 10))
print(power(-2, 5))
