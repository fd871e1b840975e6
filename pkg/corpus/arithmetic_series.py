def arithmetic_sum(first, diff, terms):
    total = 0
    current = first
    count = 0
    while count < terms:
        total += current
        current += diff
        count += 1
    return total

print(arithmetic_sum(1, 1, 100))
print(arithmetic_sum(5, 3, 20))
