def fib_iterative(n):
    if n < 0:
        raise Exception("n is negative")
    if n == 0:
        return [0]
    fib = [0, 1]
    for _ in range(n - 1):
        fib.append(fib[-1] + fib[-2])
    return fib


def fib_memoization(n):
    cache = {0: 0, 1: 1, 2: 1}

    def rec_fn_memoized(num):
        if num in cache:
            return cache[num]
        value = rec_fn_memoized(num - 1) + rec_fn_memoized(num - 2)
        cache[num] = value
        return value

    return [rec_fn_memoized(i) for i in range(n + 1)]


print(fib_iterative(15))
print(fib_memoization(15) == fib_iterative(15))
print(fib_iterative(90)[-1])
