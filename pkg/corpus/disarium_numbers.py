def is_disarium(n):
    total = 0
    for position, ch in enumerate(str(n), start=1):
        total += int(ch) ** position
    return total == n

for n in range(1, 600):
    if is_disarium(n):
        print(n)
