def is_kaprekar(n):
    square = str(n * n)
    for split in range(1, len(square)):
        left = int(square[:split])
        right = int(square[split:])
        if right > 0 and left + right == n:
            return True
    return n == 1

print([n for n in range(1, 300) if is_kaprekar(n)])
