from math import pi

def rectangle(width, height):
    return width * height

def circle(radius):
    return pi * radius ** 2

def triangle(base, height):
    return base * height / 2

print(rectangle(3, 4))
print(round(circle(2.5), 5))
print(triangle(10, 7))
