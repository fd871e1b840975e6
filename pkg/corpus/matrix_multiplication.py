def matrix_multiply(a, b):
    rows, inner, cols = len(a), len(b), len(b[0])
    result = [[0] * cols for _ in range(rows)]
    for i in range(rows):
        for k in range(inner):
            for j in range(cols):
                result[i][j] += a[i][k] * b[k][j]
    return result

x = [[1, 2], [3, 4]]
y = [[2, 0], [1, 2]]
print(matrix_multiply(x, y))
