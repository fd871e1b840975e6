def is_armstrong(num):
    digits = str(num)
    power = len(digits)
    return num == sum(int(d) ** power for d in digits)

found = []
for n in range(1, 1000):
    if is_armstrong(n):
        found.append(n)
print(found)
