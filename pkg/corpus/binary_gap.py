def longest_binary_gap(n):
    bits = bin(n)[2:].strip("0")
    best = 0
    for chunk in bits.split("1"):
        if len(chunk) > best:
            best = len(chunk)
    return best

print(longest_binary_gap(9))
print(longest_binary_gap(529))
print(longest_binary_gap(20))
