def floor_div_parts(a, b):
    quotient = a // b
    remainder = a % b
    return quotient, remainder

print(floor_div_parts(17, 5))
print(floor_div_parts(-17, 5))
print(floor_div_parts(17, -5))
