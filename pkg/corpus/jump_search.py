def jump_search(items, target):
    n = len(items)
    step = int(n ** 0.5) or 1
    prev = 0
    while prev < n and items[min(prev + step, n) - 1] < target:
        prev += step
    for i in range(prev, min(prev + step, n)):
        if items[i] == target:
            return i
    return -1

data = [0, 1, 1, 2, 3, 5, 8, 13, 21, 34, 55]
print(jump_search(data, 21))
print(jump_search(data, 4))
