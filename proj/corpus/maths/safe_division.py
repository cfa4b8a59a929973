def safe_divide(a, b):
    try:
        result = a / b
    except ZeroDivisionError:
        print("cannot divide", a, "by zero")
        result = float("inf")
    else:
        print("divided", a, "by", b)
    finally:
        print("done")
    return result


print(safe_divide(10, 4))
print(safe_divide(1, 0))
