def classify(n):
    if n == 0:
        return "zero"
    kinds = []
    if n < 0:
        kinds.append("negative")
    if n % 2 == 0:
        kinds.append("even")
    else:
        kinds.append("odd")
    if n > 0 and (n & (n - 1)) == 0:
        kinds.append("power of two")
    return ", ".join(kinds)


for n in (0, 1, 2, 7, 8, -3, 64, 100):
    print(n, classify(n))
