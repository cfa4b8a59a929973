def greatest_common_divisor(x, y):
    return x if y == 0 else greatest_common_divisor(y, x % y)


def lcm(x, y):
    return (x * y) // greatest_common_divisor(x, y)


def solution(n=20):
    g = 1
    for i in range(1, n + 1):
        g = lcm(g, i)
    return g


for n in (10, 15, 22, 20):
    print(n, solution(n))
