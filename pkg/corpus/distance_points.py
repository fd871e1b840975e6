def distance(p1, p2):
    return ((p1[0] - p2[0]) ** 2 + (p1[1] - p2[1]) ** 2) ** 0.5

print(distance((0, 0), (3, 4)))
print(round(distance((1, 2), (4, 6)), 4))
