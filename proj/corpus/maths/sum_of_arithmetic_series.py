def sum_of_series(first_term, common_diff, num_of_terms):
    total = (num_of_terms / 2) * (2 * first_term + (num_of_terms - 1) * common_diff)
    return total


print(sum_of_series(1, 1, 10))
print(sum_of_series(1, 10, 100))
print(sum_of_series(5, -2, 8))
