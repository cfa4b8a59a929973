def extended_gcd(a, b):
    if b == 0:
        return (a, 1, 0)
    (d, p, q) = extended_gcd(b, a % b)
    return (d, q, p - q * (a // b))


def modular_division(a, b, n):
    assert n > 1 and a > 0
    (d, t, s) = extended_gcd(n, a)
    x = (b * s) % n
    return x


def invert_modulo(a, n):
    (b, x) = extended_euclid(a, n)
    if b < 0:
        b = (b % n + n) % n
    return b


def extended_euclid(a, b):
    if b == 0:
        return (1, 0)
    (x, y) = extended_euclid(b, a % b)
    k = a // b
    return (y, x - k * y)


print(modular_division(4, 8, 5))
print(modular_division(3, 8, 5))
print(invert_modulo(2, 5), invert_modulo(8, 7))
print(extended_gcd(10, 6), extended_gcd(7, 5))
