def binary_exp_recursive(base, exponent):
    if exponent < 0:
        raise ValueError("Exponent must be a non-negative integer")
    if exponent == 0:
        return 1
    if exponent % 2 == 1:
        return binary_exp_recursive(base, exponent - 1) * base
    b = binary_exp_recursive(base, exponent // 2)
    return b * b


def binary_exp_iterative(base, exponent):
    res = 1
    while exponent > 0:
        if exponent & 1:
            res *= base
        base *= base
        exponent >>= 1
    return res


for base, exponent in [(3, 5), (11, 13), (-1, 3), (2, 64)]:
    print(binary_exp_recursive(base, exponent), binary_exp_iterative(base, exponent))
