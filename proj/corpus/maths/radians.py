from math import pi


def radians(degree):
    return degree / (180 / pi)


for degree in (180, 92, 274, 109.82):
    print(degree, round(radians(degree), 8))
