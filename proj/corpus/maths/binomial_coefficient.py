def binomial_coefficient(n, r):
    if n < 0 or r < 0:
        raise ValueError("n and r must be non-negative integers")
    if 0 in (n, r):
        return 1
    c = [0 for i in range(r + 1)]
    c[0] = 1
    for i in range(1, n + 1):
        j = min(i, r)
        while j > 0:
            c[j] += c[j - 1]
            j -= 1
    return c[r]


print(binomial_coefficient(10, 5))
print(binomial_coefficient(10, 0))
print(binomial_coefficient(0, 10))
print(binomial_coefficient(20, 3))
