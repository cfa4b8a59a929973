import math


def sigmoid(vector):
    return [1 / (1 + math.exp(-x)) for x in vector]


def swish(vector, trainable_param=1.0):
    return [x * s for x, s in zip(vector, sigmoid([trainable_param * v for v in vector]))]


print([round(v, 8) for v in sigmoid([-1.0, 1.0, 2.0])])
print([round(v, 8) for v in swish([-1.0, 1.0, 2.0])])
