def extended_euclid(a, b):
    if b == 0:
        return (1, 0)
    (x, y) = extended_euclid(b, a % b)
    k = a // b
    return (y, x - k * y)


def chinese_remainder_theorem(n1, r1, n2, r2):
    (x, y) = extended_euclid(n1, n2)
    m = n1 * n2
    n = r2 * x * n1 + r1 * y * n2
    return (n % m + m) % m


print(chinese_remainder_theorem(5, 1, 7, 3))
print(chinese_remainder_theorem(6, 1, 4, 3))
print(chinese_remainder_theorem(11, 4, 13, 9))
