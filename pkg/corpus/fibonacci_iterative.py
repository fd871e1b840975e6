def fibonacci(n):
    a, b = 0, 1
    for _ in range(n):
        a, b = b, a + b
    return a

sequence = [fibonacci(i) for i in range(15)]
print(sequence)
