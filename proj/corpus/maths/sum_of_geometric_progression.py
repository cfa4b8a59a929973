def sum_of_geometric_progression(first_term, common_ratio, num_of_terms):
    if common_ratio == 1:
        return num_of_terms * first_term
    return (first_term / (1 - common_ratio)) * (1 - common_ratio**num_of_terms)


print(sum_of_geometric_progression(1, 2, 10))
print(sum_of_geometric_progression(1, 10, 5))
print(sum_of_geometric_progression(0, 2, 10))
print(sum_of_geometric_progression(1, 0, 10))
print(sum_of_geometric_progression(-1, 2, 10))
