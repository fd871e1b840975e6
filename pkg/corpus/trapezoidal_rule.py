def integrate(f, a, b, steps=1000):
    width = (b - a) / steps
    total = (f(a) + f(b)) / 2
    for i in range(1, steps):
        total += f(a + i * width)
    return total * width

print(round(integrate(lambda x: x * x, 0, 1), 6))
print(round(integrate(lambda x: x ** 3, 0, 2), 6))
