def primes_up_to(limit):
    flags = [True] * (limit + 1)
    flags[0] = flags[1] = False
    for i in range(2, int(limit**0.5) + 1):
        if flags[i]:
            for j in range(i * i, limit + 1, i):
                flags[j] = False
    return [i for i, flag in enumerate(flags) if flag]


def goldbach(even):
    primes = set(primes_up_to(even))
    for p in sorted(primes):
        if even - p in primes:
            return p, even - p
    return None


for n in range(4, 60, 6):
    print(n, goldbach(n))
