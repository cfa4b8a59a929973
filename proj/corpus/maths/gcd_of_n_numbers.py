from functools import reduce


def greatest_common_divisor(a, b):
    while b:
        a, b = b, a % b
    return abs(a)


def get_greatest_common_divisor(*numbers):
    for number in numbers:
        if not isinstance(number, int) or number <= 0:
            raise Exception("numbers must be integer and greater than zero")
    return reduce(greatest_common_divisor, numbers)


print(get_greatest_common_divisor(18, 45))
print(get_greatest_common_divisor(23, 37))
print(get_greatest_common_divisor(2520, 8350))
print(get_greatest_common_divisor(1, 2, 3, 4, 5, 6, 7, 8, 9, 10))
