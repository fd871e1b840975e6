def absolute_value(num):
    if num < 0:
        return -num
    return num

for value in (-7, 0, 12, -3.5):
    print(absolute_value(value))
