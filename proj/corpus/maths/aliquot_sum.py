def aliquot_sum(input_num):
    if not isinstance(input_num, int):
        raise ValueError("Input must be an integer")
    if input_num <= 0:
        raise ValueError("Input must be positive")
    return sum(
        divisor for divisor in range(1, input_num // 2 + 1) if input_num % divisor == 0
    )


for n in [1, 6, 12, 15, 28, 100, 496]:
    print(n, aliquot_sum(n))
