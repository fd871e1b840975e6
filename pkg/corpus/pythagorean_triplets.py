limit = 30
for a in range(1, limit):
    for b in range(a, limit):
        c_squared = a * a + b * b
        c = int(c_squared ** 0.5)
        if c <= limit and c * c == c_squared:
            print(a, b, c)
