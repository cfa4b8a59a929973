def polygonal_num(num, sides):
    if num < 0 or sides < 3:
        raise ValueError("Invalid input: num must be >= 0 and sides must be >= 3.")
    return ((sides - 2) * num**2 - (sides - 4) * num) // 2


for sides in range(3, 9):
    print(sides, [polygonal_num(n, sides) for n in range(8)])
