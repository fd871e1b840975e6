def permutations(n, r):
    result = 1
    for i in range(n, n - r, -1):
        result *= i
    return result

print(permutations(5, 2))
print(permutations(10, 3))
print(permutations(4, 4))
