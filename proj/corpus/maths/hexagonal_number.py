def hexagonal(number):
    if not isinstance(number, int):
        raise TypeError(f"Input value of [number={number}] must be an integer")
    if number < 1:
        raise ValueError("Input must be a positive integer")
    return number * (2 * number - 1)


print([hexagonal(n) for n in range(1, 12)])
