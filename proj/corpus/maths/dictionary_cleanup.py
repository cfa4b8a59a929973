squares = {n: n * n for n in range(10)}
for key in list(squares):
    if squares[key] % 2 == 1:
        del squares[key]
print(squares)
print(sorted(squares.values(), key=lambda v: -v))
