def abs_val(num):
    """Return the absolute value of a number."""
    return -num if num < 0 else num


def abs_min(values):
    if len(values) == 0:
        raise ValueError("abs_min() arg is an empty sequence")
    smallest = values[0]
    for item in values:
        if abs_val(item) < abs_val(smallest):
            smallest = item
    return smallest


def abs_max(values):
    if len(values) == 0:
        raise ValueError("abs_max() arg is an empty sequence")
    largest = values[0]
    for item in values:
        if abs_val(item) > abs_val(largest):
            largest = item
    return largest


print(abs_val(-5.1))
print(abs_val(0))
print(abs_min([3, -10, -2]))
print(abs_max([3, -10, -2]))
try:
    abs_min([])
except ValueError as err:
    print("error:", err)
