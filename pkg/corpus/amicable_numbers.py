def divisor_sum(n):
    total = 0
    for i in range(1, n):
        if n % i == 0:
            total += i
    return total

for a in range(2, 300):
    b = divisor_sum(a)
    if b > a and divisor_sum(b) == a:
        print(a, b)
