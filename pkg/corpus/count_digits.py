def count_digits(n):
    if n == 0:
        return 1
    n = abs(n)
    count = 0
    while n > 0:
        n //= 10
        count += 1
    return count

for value in (0, 7, 42, 100000, -9876):
    print(count_digits(value))
