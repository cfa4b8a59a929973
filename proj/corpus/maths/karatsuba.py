def karatsuba(a, b):
    if len(str(a)) == 1 or len(str(b)) == 1:
        return a * b
    m1 = max(len(str(a)), len(str(b)))
    m2 = m1 // 2
    a1, a2 = divmod(a, 10**m2)
    b1, b2 = divmod(b, 10**m2)
    x = karatsuba(a2, b2)
    y = karatsuba((a1 + a2), (b1 + b2))
    z = karatsuba(a1, b1)
    return (z * 10 ** (2 * m2)) + ((y - z - x) * 10 ** (m2)) + (x)


print(karatsuba(15463, 23489) == 15463 * 23489)
print(karatsuba(3, 9) == 3 * 9)
print(karatsuba(1234567890123456789, 987654321987654321))
