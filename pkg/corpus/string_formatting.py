width = 3
height = 4
area = width * height
print(f"{width} x {height} = {area}")
print(f"square: {width == height}")
print("%.2f" % (area / 7))
