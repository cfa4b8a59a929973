def recursive_lucas_number(n_th_number):
    if not isinstance(n_th_number, int):
        raise TypeError("recursive_lucas_number accepts only integer arguments.")
    if n_th_number == 0:
        return 2
    if n_th_number == 1:
        return 1
    return recursive_lucas_number(n_th_number - 1) + recursive_lucas_number(n_th_number - 2)


def dynamic_lucas_number(n_th_number):
    a, b = 2, 1
    for _ in range(n_th_number):
        a, b = b, a + b
    return a


print([recursive_lucas_number(i) for i in range(15)])
print([dynamic_lucas_number(i) for i in range(15)])
print(dynamic_lucas_number(80))
