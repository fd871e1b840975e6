def triangular(n):
    return n * (n + 1) // 2

print([triangular(i) for i in range(1, 16)])
