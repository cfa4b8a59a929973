def solution(n=4000000):
    i = 1
    j = 2
    total = 0
    while j <= n:
        if j % 2 == 0:
            total += j
        i, j = j, i + j
    return total


for n in (10, 15, 2, 1, 34, 4000000):
    print(n, solution(n))
