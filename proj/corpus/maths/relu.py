def relu(vector):
    return [max(0, x) for x in vector]


def leaky_relu(vector, alpha=0.01):
    return [x if x > 0 else alpha * x for x in vector]


print(relu([-1, 0, 5]))
print(leaky_relu([-10.0, 0.5, 3.0]))
