def reverse(n):
    sign = -1 if n < 0 else 1
    n = abs(n)
    result = 0
    while n:
        n, digit = divmod(n, 10)
        result = result * 10 + digit
    return sign * result


def is_palindrome(n):
    return n >= 0 and reverse(n) == n


print([reverse(n) for n in (123, -456, 1200, 0, 9)])
print([n for n in range(90, 200) if is_palindrome(n)])
