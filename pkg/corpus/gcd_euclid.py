def gcd(a, b):
    while b:
        a, b = b, a % b
    return a

print(gcd(48, 36))
print(gcd(270, 192))
print(gcd(17, 5))
