def power(base, exponent):
    result = 1
    for _ in range(exponent):
        result *= base
    return result

print(power(2, 10))
print(power(3, 5))
print(power(7, 0))
