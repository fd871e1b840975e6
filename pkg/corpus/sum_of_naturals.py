def sum_naturals(n):
    return n * (n + 1) // 2

total = 0
for i in range(1, 101):
    total += i
print(total, sum_naturals(100))
