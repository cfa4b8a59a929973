def add(first, second):
    return first + second


for a, b in [(2, 2), (-3, 7), (0, 0), (1.5, 2.25)]:
    print(f"{a} + {b} = {add(a, b)}")
