def fraction_to_binary(value, precision=10):
    out = "0."
    while precision > 0:
        value *= 2
        if value >= 1:
            out += "1"
            value -= 1
        else:
            out += "0"
        precision -= 1
    return out

print(fraction_to_binary(0.625))
print(fraction_to_binary(0.1))
