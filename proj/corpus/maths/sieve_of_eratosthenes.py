import math


def prime_sieve(num):
    if num <= 0:
        raise ValueError(f"{num}: Invalid input, please enter a positive integer.")
    sieve = [True] * (num + 1)
    prime = []
    start = 2
    end = int(math.sqrt(num))
    while start <= end:
        if sieve[start] is True:
            prime.append(start)
            for i in range(start * start, num + 1, start):
                if sieve[i] is True:
                    sieve[i] = False
        start += 1
    for j in range(end + 1, num + 1):
        if sieve[j] is True:
            prime.append(j)
    return prime


print(prime_sieve(50))
print(len(prime_sieve(10000)))
