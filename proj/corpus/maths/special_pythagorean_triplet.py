def solution(total=1000):
    for a in range(1, total // 3):
        for b in range(a + 1, total // 2):
            c = total - a - b
            if a * a + b * b == c * c:
                return a, b, c, a * b * c
    return -1


print(solution(12))
print(solution(1000))
