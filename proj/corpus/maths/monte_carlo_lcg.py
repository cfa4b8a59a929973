class LinearCongruentialGenerator:
    def __init__(self, multiplier, increment, modulo, seed):
        self.multiplier = multiplier
        self.increment = increment
        self.modulo = modulo
        self.seed = seed

    def next_number(self):
        self.seed = (self.multiplier * self.seed + self.increment) % self.modulo
        return self.seed


def estimate_pi(samples):
    lcg = LinearCongruentialGenerator(1664525, 1013904223, 2 << 31, 42)
    inside = 0
    for _ in range(samples):
        x = lcg.next_number() / lcg.modulo
        y = lcg.next_number() / lcg.modulo
        if x * x + y * y <= 1:
            inside += 1
    return 4 * inside / samples


print(estimate_pi(20000))
