import math


def fx(x, a):
    return math.pow(x, 2) - a


def fx_derivative(x):
    return 2 * x


def get_initial_point(a):
    start = 2.0
    while start <= a:
        start = math.pow(start, 2)
    return start


def square_root_iterative(a, max_iter=9999, tolerance=1e-14):
    if a < 0:
        raise ValueError("math domain error")
    value = get_initial_point(a)
    for _ in range(max_iter):
        prev_value = value
        value = value - fx(value, a) / fx_derivative(value)
        if abs(prev_value - value) < tolerance:
            return value
    return value


for i in range(0, 25, 4):
    print(i, round(square_root_iterative(i), 10))
