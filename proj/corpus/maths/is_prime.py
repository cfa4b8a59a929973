import math


def is_prime(number):
    if not isinstance(number, int) or number < 0:
        raise ValueError("is_prime() only accepts positive integers")
    if 1 < number < 4:
        return True
    elif number < 2 or number % 2 == 0 or number % 3 == 0:
        return False
    for i in range(5, int(math.sqrt(number) + 1), 6):
        if number % i == 0 or number % (i + 2) == 0:
            return False
    return True


print([n for n in range(60) if is_prime(n)])
print(is_prime(2999), is_prime(1_000_003), is_prime(1_000_001))
