import math


class Vector:
    def __init__(self, components):
        self.components = list(components)

    def __len__(self):
        return len(self.components)

    def __add__(self, other):
        return Vector(a + b for a, b in zip(self.components, other.components))

    def __sub__(self, other):
        return Vector(a - b for a, b in zip(self.components, other.components))

    def dot(self, other):
        return sum(a * b for a, b in zip(self.components, other.components))

    def euclidean_length(self):
        return math.sqrt(self.dot(self))

    def __str__(self):
        return "(" + ",".join(map(str, self.components)) + ")"


v = Vector([1, 2, 3])
w = Vector([2, -1, 4])
print(v + w, v - w, v.dot(w), len(v))
print(f"{Vector([3, 4]).euclidean_length():.1f}")
