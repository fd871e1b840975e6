def sum_squares(n):
    return n * (n + 1) * (2 * n + 1) // 6

total = 0
for i in range(1, 21):
    total += i * i
print(total, sum_squares(20))
