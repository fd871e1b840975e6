def hamming(a, b):
    if len(a) != len(b):
        return -1
    distance = 0
    for x, y in zip(a, b):
        if x != y:
            distance += 1
    return distance

print(hamming("karolin", "kathrin"))
print(hamming("1011101", "1001001"))
