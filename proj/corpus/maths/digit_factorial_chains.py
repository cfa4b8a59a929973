from math import factorial

DIGIT_FACTORIAL = {str(d): factorial(d) for d in range(10)}


def digit_factorial_sum(number):
    return sum(DIGIT_FACTORIAL[digit] for digit in str(number))


def chain_length(start):
    seen = []
    number = start
    while number not in seen:
        seen.append(number)
        number = digit_factorial_sum(number)
    return len(seen)


print([chain_length(n) for n in (69, 78, 540, 145, 169, 871)])
