def is_harshad(number, base=10):
    total = 0
    n = number
    while n:
        total += n % base
        n //= base
    return number % total == 0


print([n for n in range(1, 60) if is_harshad(n)])
print([n for n in range(1, 40) if is_harshad(n, 2)])
