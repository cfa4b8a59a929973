DIGITS = "0123456789ABCDEFGHIJKLMNOPQRSTUVWXYZ"


def to_base(number, base):
    if not 2 <= base <= 36:
        raise ValueError("base must be between 2 and 36")
    if number == 0:
        return "0"
    sign = "-" if number < 0 else ""
    number = abs(number)
    out = []
    while number:
        number, remainder = divmod(number, base)
        out.append(DIGITS[remainder])
    return sign + "".join(reversed(out))


for n, base in ((255, 2), (255, 16), (-42, 7), (0, 3), (123456789, 36)):
    print(n, base, to_base(n, base), int(to_base(n, base), base) == n)
print(0xFF, 0o17, 0b1011, 1_000.5e-3)
