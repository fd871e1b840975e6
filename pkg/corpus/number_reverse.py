def reverse_number(n):
    reversed_value = 0
    while n > 0:
        reversed_value = reversed_value * 10 + n % 10
        n //= 10
    return reversed_value

print(reverse_number(1234))
print(reverse_number(900))
