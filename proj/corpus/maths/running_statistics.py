import math


class RunningStats:
    def __init__(self):
        self.count = 0
        self.mean = 0.0
        self.m2 = 0.0

    def push(self, value):
        self.count += 1
        delta = value - self.mean
        self.mean += delta / self.count
        self.m2 += delta * (value - self.mean)

    def variance(self):
        return self.m2 / (self.count - 1) if self.count > 1 else 0.0

    def stddev(self):
        return math.sqrt(self.variance())


stats = RunningStats()
for x in [2, 4, 4, 4, 5, 5, 7, 9]:
    stats.push(x)
print(stats.count, stats.mean, round(stats.variance(), 6), round(stats.stddev(), 6))
