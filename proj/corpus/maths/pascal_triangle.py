def generate_pascal_triangle(num_rows):
    if not isinstance(num_rows, int):
        raise TypeError("The input value of 'num_rows' should be 'int'")
    if num_rows == 0:
        return []
    elif num_rows < 0:
        raise ValueError("The input value of 'num_rows' should be greater than or equal to 0")
    triangle = []
    for current_row_idx in range(num_rows):
        current_row = [1] * (current_row_idx + 1)
        for current_col_idx in range(1, current_row_idx):
            above_to_left = triangle[current_row_idx - 1][current_col_idx - 1]
            above_to_right = triangle[current_row_idx - 1][current_col_idx]
            current_row[current_col_idx] = above_to_left + above_to_right
        triangle.append(current_row)
    return triangle


def print_pascal_triangle(num_rows):
    triangle = generate_pascal_triangle(num_rows)
    for row_idx in range(num_rows):
        print(" " * (num_rows - row_idx - 1), end="")
        print(" ".join(str(v) for v in triangle[row_idx]))


print_pascal_triangle(6)
print(generate_pascal_triangle(0))
