def kaprekar_steps(number):
    steps = []
    while number != 6174:
        digits = f"{number:04d}"
        high = int("".join(sorted(digits, reverse=True)))
        low = int("".join(sorted(digits)))
        number = high - low
        steps.append(number)
        if number == 0:
            break
    return steps


for start in (3524, 2111, 9831, 1000):
    print(start, kaprekar_steps(start))
