def is_neon(n):
    return n == sum(int(d) for d in str(n * n))

print([n for n in range(0, 100) if is_neon(n)])
