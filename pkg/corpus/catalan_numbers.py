def catalan(n):
    if n <= 1:
        return 1
    result = 0
    for i in range(n):
        result += catalan(i) * catalan(n - 1 - i)
    return result

for i in range(10):
    print(catalan(i), end=" ")
print()
