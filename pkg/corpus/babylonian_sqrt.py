def babylonian_sqrt(n, iterations=20):
    guess = n / 2 if n > 1 else 1.0
    count = 0
    while count < iterations:
        guess = (guess + n / guess) / 2
        count += 1
    return guess

print(round(babylonian_sqrt(25), 6))
print(round(babylonian_sqrt(2), 6))
