def pascal_rows(count):
    row = [1]
    for _ in range(count):
        yield row
        row = [1] + [a + b for a, b in zip(row, row[1:])] + [1]

for row in pascal_rows(7):
    print(row)
