def hexagonal(n):
    return n * (2 * n - 1)

print([hexagonal(i) for i in range(1, 11)])
