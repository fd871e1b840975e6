def is_perfect_square(n):
    if n < 0:
        return False
    root = int(n ** 0.5)
    return root * root == n or (root + 1) ** 2 == n

for value in (0, 1, 2, 16, 24, 25, 26):
    print(value, is_perfect_square(value))
