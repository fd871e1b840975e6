def digit_sum(n):
    total = 0
    for ch in str(abs(n)):
        total += int(ch)
    return total

print(digit_sum(1234))
print(digit_sum(999))
print(digit_sum(-405))
