from math import sqrt


def euclidean_distance(vector_1, vector_2):
    return sqrt(sum((v1 - v2) ** 2 for v1, v2 in zip(vector_1, vector_2)))


print(euclidean_distance((0, 0), (2, 2)))
print(euclidean_distance([1, 2, 3], [4, 5, 6]))
print(euclidean_distance([1, 2, 3, 4], [5, 6, 7, 8]))
