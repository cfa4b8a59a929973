def factorial(number):
    if number != int(number):
        raise ValueError("factorial() only accepts integral values")
    if number < 0:
        raise ValueError("factorial() not defined for negative values")
    value = 1
    for i in range(1, number + 1):
        value *= i
    return value


def factorial_recursive(n):
    return 1 if n in {0, 1} else n * factorial_recursive(n - 1)


print([factorial(i) for i in range(10)])
print(factorial_recursive(20))
try:
    factorial(-1)
except ValueError as e:
    print(e)
