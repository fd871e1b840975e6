def newton_sqrt(n):
    x = float(n)
    for _ in range(30):
        x = x - (x * x - n) / (2 * x)
    return x

print(round(newton_sqrt(612), 6))
print(round(newton_sqrt(2), 6))
