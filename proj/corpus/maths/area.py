from math import pi, sqrt


def surface_area_cube(side_length):
    if side_length < 0:
        raise ValueError("surface_area_cube() only accepts non-negative values")
    return 6 * side_length**2


def area_circle(radius):
    if radius < 0:
        raise ValueError("area_circle() only accepts non-negative values")
    return pi * radius**2


def area_triangle_three_sides(side1, side2, side3):
    semi_perimeter = (side1 + side2 + side3) / 2
    return sqrt(
        semi_perimeter
        * (semi_perimeter - side1)
        * (semi_perimeter - side2)
        * (semi_perimeter - side3)
    )


def area_trapezium(base1, base2, height):
    return 1 / 2 * (base1 + base2) * height


print(surface_area_cube(3))
print(round(area_circle(20), 6))
print(area_triangle_three_sides(5, 12, 13))
print(area_trapezium(10, 20, 30))
