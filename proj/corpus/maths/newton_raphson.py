def newton_raphson(func, derivative, start, precision=10**-10):
    x = start
    while True:
        step = func(x) / derivative(x)
        x = x - step
        if abs(step) < precision:
            return x


print(f"{newton_raphson(lambda x: x * x - 2, lambda x: 2 * x, 1.0):.10f}")
print(f"{newton_raphson(lambda x: x**3 - 2 * x - 5, lambda x: 3 * x**2 - 2, 2.0):.10f}")
