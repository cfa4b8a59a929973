def armstrong_number(n):
    if not isinstance(n, int) or n < 1:
        return False
    number_of_digits = len(str(n))
    total = 0
    temp = n
    while temp > 0:
        rem = temp % 10
        total += rem**number_of_digits
        temp //= 10
    return n == total


found = [i for i in range(1, 10000) if armstrong_number(i)]
print(found)
print(armstrong_number(-1), armstrong_number(1.2), armstrong_number(200))
