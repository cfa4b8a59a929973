def triangular_number(position):
    if position < 0:
        raise ValueError("param `position` must be non-negative")
    return position * (position + 1) // 2


print([triangular_number(i) for i in range(12)])
print(triangular_number(100000))
