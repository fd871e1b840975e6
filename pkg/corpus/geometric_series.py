def geometric_sum(first, ratio, terms):
    total = 0.0
    current = first
    for _ in range(terms):
        total += current
        current *= ratio
    return total

print(geometric_sum(1, 0.5, 10))
print(geometric_sum(2, 3, 5))
