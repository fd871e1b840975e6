def extended_gcd(a, b):
    if b == 0:
        return a, 1, 0
    g, x, y = extended_gcd(b, a % b)
    return g, y, x - (a // b) * y

for pair in ((240, 46), (17, 5)):
    g, x, y = extended_gcd(*pair)
    print(g, x, y, pair[0] * x + pair[1] * y)
