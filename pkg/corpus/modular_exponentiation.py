def power_mod(base, exponent, modulus):
    result = 1
    base %= modulus
    while exponent > 0:
        if exponent & 1:
            result = result * base % modulus
        base = base * base % modulus
        exponent >>= 1
    return result

print(power_mod(2, 10, 1000))
print(power_mod(7, 256, 13))
print(pow(7, 256, 13))
