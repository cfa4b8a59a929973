def checked_root(n):
    assert n >= 0, "n must be non-negative"
    return n**0.5


for value in (16, 2.25, -4):
    try:
        print(value, checked_root(value))
    except AssertionError as error:
        print("rejected:", error)
