def is_prime_wilson(n):
    if n < 2:
        return False
    factorial_mod = 1
    for i in range(2, n):
        factorial_mod = factorial_mod * i % n
    return (factorial_mod + 1) % n == 0

print([n for n in range(2, 40) if is_prime_wilson(n)])
