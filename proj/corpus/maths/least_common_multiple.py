def greatest_common_divisor(a, b):
    while b:
        a, b = b, a % b
    return a


def least_common_multiple_slow(first_num, second_num):
    max_num = first_num if first_num >= second_num else second_num
    common_mult = max_num
    while (common_mult % first_num > 0) or (common_mult % second_num > 0):
        common_mult += max_num
    return common_mult


def least_common_multiple_fast(first_num, second_num):
    return first_num // greatest_common_divisor(first_num, second_num) * second_num


test_inputs = [(10, 20), (13, 15), (4, 31), (10, 42), (43, 34), (5, 12), (12, 25), (10, 25), (6, 9)]
for a, b in test_inputs:
    slow = least_common_multiple_slow(a, b)
    fast = least_common_multiple_fast(a, b)
    assert slow == fast
    print(a, b, fast)
