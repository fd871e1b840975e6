def celsius_to_fahrenheit(c):
    return c * 9 / 5 + 32

def fahrenheit_to_celsius(f):
    return (f - 32) * 5 / 9

for c in (-40, 0, 37, 100):
    f = celsius_to_fahrenheit(c)
    print(c, f, round(fahrenheit_to_celsius(f), 6))
