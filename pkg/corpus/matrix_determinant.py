def det2(m):
    return m[0][0] * m[1][1] - m[0][1] * m[1][0]

def det3(m):
    total = 0
    for c in range(3):
        minor = [[m[r][col] for col in range(3) if col != c] for r in (1, 2)]
        sign = 1 if c % 2 == 0 else -1
        total += sign * m[0][c] * det2(minor)
    return total

print(det2([[3, 8], [4, 6]]))
print(det3([[6, 1, 1], [4, -2, 5], [2, 8, 7]]))
