def classify(a, b, c):
    if a + b <= c or a + c <= b or b + c <= a:
        return "invalid"
    if a == b == c:
        return "equilateral"
    if a == b or b == c or a == c:
        return "isosceles"
    return "scalene"

for sides in ((3, 3, 3), (3, 4, 5), (2, 2, 3), (1, 2, 9)):
    print(sides, classify(*sides))
