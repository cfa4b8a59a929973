kept = []
for n in range(1, 40):
    if n % 3 == 0:
        continue
    if n > 30:
        break
    if n % 7 == 0:
        pass
    kept.append(n)
print(kept)
print(True and not False, False or None)
