def is_prime(number):
    if number < 2:
        return False
    if number < 4:
        return True
    if number % 2 == 0:
        return False
    factor = 3
    while factor * factor <= number:
        if number % factor == 0:
            return False
        factor += 2
    return True


def twin_prime(number):
    if not isinstance(number, int):
        raise TypeError(f"Input value of [number={number}] must be an integer")
    if is_prime(number) and is_prime(number + 2):
        return number + 2
    return -1


print([(n, twin_prime(n)) for n in range(200) if twin_prime(n) != -1])
