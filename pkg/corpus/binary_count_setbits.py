def count_set_bits(n):
    count = 0
    while n:
        count += n & 1
        n >>= 1
    return count

for value in (0, 1, 7, 255, 1024, 12345):
    print(value, count_set_bits(value))
