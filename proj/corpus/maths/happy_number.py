def is_happy_number(number):
    seen = set()
    while number != 1 and number not in seen:
        seen.add(number)
        number = sum(int(digit) ** 2 for digit in str(number))
    return number == 1


print([n for n in range(1, 100) if is_happy_number(n)])
