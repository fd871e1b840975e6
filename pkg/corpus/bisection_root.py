def bisection(f, a, b, steps=60):
    for _ in range(steps):
        mid = (a + b) / 2
        if f(a) * f(mid) <= 0:
            b = mid
        else:
            a = mid
    return (a + b) / 2

root = bisection(lambda x: x ** 2 - 2, 0, 2)
print(round(root, 9))
