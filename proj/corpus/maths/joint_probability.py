def joint_probability_distribution(x_values, y_values, x_probabilities, y_probabilities):
    return {
        (x, y): x_prob * y_prob
        for x, x_prob in zip(x_values, x_probabilities)
        for y, y_prob in zip(y_values, y_probabilities)
    }


def expectation(values, probabilities):
    return sum(x * p for x, p in zip(values, probabilities))


def variance(values, probabilities):
    mean = expectation(values, probabilities)
    return sum((x - mean) ** 2 * p for x, p in zip(values, probabilities))


dist = joint_probability_distribution([1, 2], [-2, 5, 8], [0.7, 0.3], [0.3, 0.5, 0.2])
for key in sorted(dist):
    print(key, round(dist[key], 4))
print(round(expectation([1, 2], [0.7, 0.3]), 4))
print(round(variance([1, 2], [0.7, 0.3]), 4))
