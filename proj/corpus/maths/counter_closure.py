calls = 0


def make_counter(step):
    value = 0

    def advance():
        nonlocal value
        global calls
        calls += 1
        value += step
        return value

    return advance


by_two = make_counter(2)
by_five = make_counter(5)
print([by_two() for _ in range(4)])
print([by_five() for _ in range(3)])
print("calls:", calls)
