def greatest_common_divisor(a, b):
    return abs(b) if a == 0 else greatest_common_divisor(b % a, a)


def gcd_by_iterative(x, y):
    while y:
        x, y = y, x % y
    return abs(x)


pairs = [(24, 40), (1, 1), (1, 800), (11, 37), (3, 5), (16, 4), (-3, 9), (9, -3), (-3, -9)]
for x, y in pairs:
    print(x, y, greatest_common_divisor(x, y), gcd_by_iterative(x, y))
