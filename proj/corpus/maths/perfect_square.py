import math


def perfect_square(num):
    return math.sqrt(num) * math.sqrt(num) == num


def perfect_square_binary_search(n):
    left = 0
    right = n
    while left <= right:
        mid = (left + right) // 2
        if mid**2 == n:
            return True
        elif mid**2 > n:
            right = mid - 1
        else:
            left = mid + 1
    return False


for n in (0, 1, 2, 9, 16, 10, 49, 50, 1000000, 1000001):
    print(n, perfect_square(n), perfect_square_binary_search(n))
