def dot(a, b):
    return sum(x * y for x, y in zip(a, b))

def magnitude(v):
    return dot(v, v) ** 0.5

v1 = (1, 2, 3)
v2 = (4, -5, 6)
print(dot(v1, v2))
print(round(magnitude(v1), 6))
