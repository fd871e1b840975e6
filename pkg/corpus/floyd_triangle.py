def floyd_triangle(rows):
    number = 1
    for row in range(1, rows + 1):
        line = []
        for _ in range(row):
            line.append(str(number))
            number += 1
        print(" ".join(line))

floyd_triangle(5)
