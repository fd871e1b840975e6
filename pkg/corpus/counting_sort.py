def counting_sort(items):
    if not items:
        return []
    top = max(items)
    counts = [0] * (top + 1)
    for value in items:
        counts[value] += 1
    out = []
    for value, count in enumerate(counts):
        out.extend([value] * count)
    return out

print(counting_sort([4, 2, 2, 8, 3, 3, 1]))
