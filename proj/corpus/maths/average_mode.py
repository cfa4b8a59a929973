def mode(input_list):
    if not input_list:
        return []
    result = [input_list.count(value) for value in input_list]
    y = max(result)
    return sorted({input_list[i] for i, value in enumerate(result) if value == y})


print(mode([2, 3, 4, 5, 3, 4, 2, 5, 2, 2, 4, 2, 2, 2]))
print(mode([3, 4, 5, 3, 4, 2, 5, 2, 2, 4, 4, 2, 2, 2]))
print(mode(["x", "y", "y", "z"]))
print(mode([]))
