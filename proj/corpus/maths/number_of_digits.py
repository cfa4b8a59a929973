import math


def num_digits(n):
    digits = 0
    n = abs(n)
    while True:
        n = n // 10
        digits += 1
        if n == 0:
            break
    return digits


def num_digits_fast(n):
    return 1 if n == 0 else math.floor(math.log(abs(n), 10) + 1)


def num_digits_faster(n):
    return len(str(abs(n)))


for n in (12345, 123, 0, -1, -123456, 10**20 + 1):
    print(num_digits(n), num_digits_faster(n))
print(num_digits_fast(999))
