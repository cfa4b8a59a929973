values = []
while True:
    line = input()
    if line == "end":
        break
    values.append(float(line))
    print(f"after {len(values)} values the mean is {sum(values) / len(values):.3f}")
