def binary_and(a, b):
    return bin(a & b)

print(binary_and(25, 32))
print(binary_and(37, 50))
print(binary_and(21, 30))
