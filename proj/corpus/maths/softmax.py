import math


def softmax(vector):
    exponent_vector = [math.exp(v) for v in vector]
    sum_of_exponents = sum(exponent_vector)
    return [e / sum_of_exponents for e in exponent_vector]


result = softmax([1, 2, 3, 4])
print([round(v, 6) for v in result])
print(round(sum(result), 6))
print(softmax([0]))
