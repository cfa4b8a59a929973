n = int(input())
limit = int(input())
for i in range(1, limit + 1):
    print(f"{n} * {i} = {n * i}")
