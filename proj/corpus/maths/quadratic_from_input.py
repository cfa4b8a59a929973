import math

a = float(input())
b = float(input())
c = float(input())
d = b * b - 4 * a * c
if d < 0:
    print("no real roots")
elif d == 0:
    print("one root:", -b / (2 * a))
else:
    r1 = (-b + math.sqrt(d)) / (2 * a)
    r2 = (-b - math.sqrt(d)) / (2 * a)
    print("roots:", min(r1, r2), max(r1, r2))
