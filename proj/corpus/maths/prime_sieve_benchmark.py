def count_primes(limit):
    sieve = bytearray([1]) * (limit + 1)
    sieve[0] = sieve[1] = 0
    i = 2
    while i * i <= limit:
        if sieve[i]:
            for j in range(i * i, limit + 1, i):
                sieve[j] = 0
        i += 1
    return sum(sieve)


def sum_of_divisor_counts(limit):
    counts = [0] * (limit + 1)
    for d in range(1, limit + 1):
        for m in range(d, limit + 1, d):
            counts[m] += 1
    return sum(counts)


print(count_primes(2_000_000))
print(sum_of_divisor_counts(200_000))
