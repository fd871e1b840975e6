def double_factorial(n):
    result = 1
    while n > 1:
        result *= n
        n -= 2
    return result

for n in (0, 5, 8, 10):
    print(n, double_factorial(n))
