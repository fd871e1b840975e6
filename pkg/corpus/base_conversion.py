def to_base(num, base):
    if num == 0:
        return "0"
    digits = "0123456789abcdef"
    out = ""
    while num > 0:
        out = digits[num % base] + out
        num //= base
    return out

print(to_base(255, 2))
print(to_base(255, 8))
print(to_base(255, 16))
print(to_base(1000, 7))
