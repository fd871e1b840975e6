def is_prime(n):
    if n < 2:
        return False
    i = 2
    while i * i <= n:
        if n % i == 0:
            return False
        i += 1
    return True

for n in range(2, 100):
    if is_prime(n) and is_prime(n + 2):
        print(n, n + 2)
