def perfect(number):
    if not isinstance(number, int):
        raise ValueError("number must be an integer")
    if number <= 0:
        return False
    return sum(i for i in range(1, number // 2 + 1) if number % i == 0) == number


print([n for n in range(1, 10000) if perfect(n)])
print(perfect(27), perfect(28), perfect(-1))
