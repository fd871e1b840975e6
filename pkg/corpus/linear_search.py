def linear_search(items, target):
    for index, value in enumerate(items):
        if value == target:
            return index
    return -1

data = [9, 4, 7, 2, 8]
print(linear_search(data, 7))
print(linear_search(data, 3))
