def floor(x):
    return int(x) if x - int(x) >= 0 else int(x) - 1


for value in (1, -1, 0, 1.1, -1.1, 1.0, -1.0, 2.5, -2.5):
    print(value, floor(value))
