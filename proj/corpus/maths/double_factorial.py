def double_factorial_recursive(n):
    if not isinstance(n, int):
        raise ValueError("double_factorial_recursive() only accepts integral values")
    if n < 0:
        raise ValueError("double_factorial_recursive() not defined for negative values")
    return 1 if n <= 1 else n * double_factorial_recursive(n - 2)


def double_factorial_iterative(num):
    value = 1
    for i in range(num, 0, -2):
        value *= i
    return value


print([double_factorial_recursive(i) for i in range(10)])
print([double_factorial_iterative(i) for i in range(10)])
