def ceil(x):
    return int(x) if x - int(x) <= 0 else int(x) + 1


for value in (1, -1, 0, -0.0, 1.1, -1.1, 1.0, -1.0, 1_000_000_000):
    print(value, ceil(value))
