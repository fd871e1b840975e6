FACTORIALS = [1]
for i in range(1, 10):
    FACTORIALS.append(FACTORIALS[-1] * i)

def is_strong(n):
    return n == sum(FACTORIALS[int(d)] for d in str(n))

print([n for n in range(1, 50000) if is_strong(n)])
