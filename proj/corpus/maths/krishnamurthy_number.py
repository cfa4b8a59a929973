def factorial(digit):
    return 1 if digit in (0, 1) else (digit * factorial(digit - 1))


def krishnamurthy(number):
    fact_sum = 0
    duplicate = number
    while duplicate > 0:
        duplicate, digit = divmod(duplicate, 10)
        fact_sum += factorial(digit)
    return fact_sum == number


print([n for n in range(1, 50000) if krishnamurthy(n)])
