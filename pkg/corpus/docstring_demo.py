def clamp(value, low, high):
    """Clamp value into [low, high].

    Keywords like if and while inside this docstring stay as written.
    """
    if value < low:
        return low
    if value > high:
        return high
    return value

for v in (-5, 3, 42):
    print(clamp(v, 0, 10))
