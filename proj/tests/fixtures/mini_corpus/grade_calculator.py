def grade(score):
    if score >= 90:
        return "A"
    elif score >= 80:
        return "B"
    elif score >= 70:
        return "C"
    elif score >= 60:
        return "D"
    return "F"


count = int(input())
for _ in range(count):
    name, score = input().split()
    print(name, grade(int(score)))
