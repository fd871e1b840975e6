def binomial(n, k):
    if k < 0 or k > n:
        return 0
    k = min(k, n - k)
    result = 1
    for i in range(k):
        result = result * (n - i) // (i + 1)
    return result

print(binomial(10, 3))
print(binomial(52, 5))
print(binomial(6, 0))
