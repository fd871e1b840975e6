def is_magic(square):
    n = len(square)
    target = sum(square[0])
    for row in square:
        if sum(row) != target:
            return False
    for col in range(n):
        if sum(row[col] for row in square) != target:
            return False
    if sum(square[i][i] for i in range(n)) != target:
        return False
    if sum(square[i][n - 1 - i] for i in range(n)) != target:
        return False
    return True

print(is_magic([[2, 7, 6], [9, 5, 1], [4, 3, 8]]))
print(is_magic([[1, 2], [3, 4]]))
