def quadratic_roots(a, b, c):
    discriminant = b * b - 4 * a * c
    if discriminant < 0:
        return None
    root = discriminant ** 0.5
    return (-b - root) / (2 * a), (-b + root) / (2 * a)

print(quadratic_roots(1, -3, 2))
print(quadratic_roots(1, 0, -4))
print(quadratic_roots(1, 0, 4))
