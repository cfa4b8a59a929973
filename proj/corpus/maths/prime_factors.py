def prime_factors(n):
    i = 2
    factors = []
    while i * i <= n:
        if n % i:
            i += 1
        else:
            n //= i
            factors.append(i)
    if n > 1:
        factors.append(n)
    return factors


for n in (0, 100, 2560, 10**-2, 0.02, 10**241, 600851475143):
    if isinstance(n, int):
        result = prime_factors(n)
        print(n if n < 10**20 else "10**241", result if len(result) < 20 else len(result))
