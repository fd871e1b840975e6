def in_range(x):
    return 0 <= x < 10

for value in (-1, 0, 5, 9, 10):
    print(value, in_range(value))
