from math import pi

def arc_length(angle, radius):
    return 2 * pi * radius * (angle / 360)

print(round(arc_length(45, 5), 4))
print(round(arc_length(120, 15), 4))
