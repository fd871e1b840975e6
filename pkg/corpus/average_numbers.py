def mean(values):
    return sum(values) / len(values)

data = [3, 7, 1, 9, 4, 6]
print(mean(data))
print(mean([2.5, 3.5]))
