width = int(input())
height = int(input())
print("area:", width * height)
print("perimeter:", 2 * (width + height))
