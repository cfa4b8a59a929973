def catalan(number):
    if not isinstance(number, int):
        raise TypeError(f"Input value of [number={number}] must be an integer")
    if number < 1:
        raise ValueError(f"Input value of [number={number}] must be > 0")
    current_number = 1
    for i in range(1, number):
        current_number *= 4 * i - 2
        current_number //= i + 1
    return current_number


print([catalan(i) for i in range(1, 16)])
for bad in (0, -1, 5.0):
    try:
        catalan(bad)
    except (TypeError, ValueError) as exc:
        print(type(exc).__name__, exc)
