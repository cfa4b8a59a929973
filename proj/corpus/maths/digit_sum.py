def sum_of_digits(n):
    n = abs(n)
    res = 0
    while n > 0:
        res += n % 10
        n //= 10
    return res


def sum_of_digits_recursion(n):
    n = abs(n)
    return n if n < 10 else n % 10 + sum_of_digits(n // 10)


def sum_of_digits_compact(n):
    return sum(int(c) for c in str(abs(n)))


for value in (12345, 123, -123, 0, 262144, 1125899906842624):
    print(sum_of_digits(value), sum_of_digits_recursion(value), sum_of_digits_compact(value))
