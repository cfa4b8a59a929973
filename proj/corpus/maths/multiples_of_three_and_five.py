def solution(n=1000):
    return sum(e for e in range(3, n) if e % 3 == 0 or e % 5 == 0)


for n in (3, 4, 10, 600, 1000):
    print(n, solution(n))
