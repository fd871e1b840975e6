def harmonic(n):
    total = 0.0
    for k in range(1, n + 1):
        total += 1 / k
    return total

print(round(harmonic(10), 6))
print(round(harmonic(100), 6))
