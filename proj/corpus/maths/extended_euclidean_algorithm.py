def extended_euclidean_algorithm(a, b):
    if abs(a) == 1:
        return a, 0
    elif abs(b) == 1:
        return 0, b
    old_remainder, remainder = a, b
    old_coeff_a, coeff_a = 1, 0
    old_coeff_b, coeff_b = 0, 1
    while remainder != 0:
        quotient = old_remainder // remainder
        old_remainder, remainder = remainder, old_remainder - quotient * remainder
        old_coeff_a, coeff_a = coeff_a, old_coeff_a - quotient * coeff_a
        old_coeff_b, coeff_b = coeff_b, old_coeff_b - quotient * coeff_b
    if a < 0:
        old_coeff_a = -old_coeff_a
    if b < 0:
        old_coeff_b = -old_coeff_b
    return old_coeff_a, old_coeff_b


for a, b in ((1, 24), (8, 14), (240, 46), (1, -4), (-2, -4), (0, -4), (2, 0)):
    print(a, b, extended_euclidean_algorithm(a, b))
