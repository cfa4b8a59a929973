from fractions import Fraction


def sum_of_harmonic_progression(first_term, common_difference, number_of_terms):
    arithmetic_progression = [1 / first_term]
    first_term = 1 / first_term
    for _ in range(number_of_terms - 1):
        first_term += common_difference
        arithmetic_progression.append(first_term)
    harmonic_series = [1 / step for step in arithmetic_progression]
    return sum(harmonic_series)


def harmonic_exact(n):
    return sum(Fraction(1, k) for k in range(1, n + 1))


print(round(sum_of_harmonic_progression(1 / 2, 2, 2), 6))
print(round(sum_of_harmonic_progression(1 / 5, 5, 5), 6))
print(harmonic_exact(10))
