def is_harshad(n):
    digit_total = sum(int(d) for d in str(n))
    return n % digit_total == 0

print([n for n in range(1, 101) if is_harshad(n)])
