def signum(num):
    if num < 0:
        return -1
    return 1 if num else 0


print([signum(x) for x in (5, -5, 0, 10.5, -10.5, 1e-6, -1e-6, 123456789)])
