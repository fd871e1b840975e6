def binary_to_decimal(binary):
    result = 0
    for bit in binary:
        result = result * 2 + int(bit)
    return result

print(binary_to_decimal("1011"))
print(binary_to_decimal("11111111"))
print(binary_to_decimal("100000"))
