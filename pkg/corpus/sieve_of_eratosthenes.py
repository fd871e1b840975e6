def sieve(limit):
    flags = [True] * (limit + 1)
    flags[0] = flags[1] = False
    for i in range(2, int(limit ** 0.5) + 1):
        if flags[i]:
            for multiple in range(i * i, limit + 1, i):
                flags[multiple] = False
    return [i for i, ok in enumerate(flags) if ok]

print(sieve(100))
