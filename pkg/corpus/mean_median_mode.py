def median(values):
    ordered = sorted(values)
    n = len(ordered)
    mid = n // 2
    if n % 2 == 1:
        return ordered[mid]
    return (ordered[mid - 1] + ordered[mid]) / 2

def mode(values):
    counts = {}
    for v in values:
        counts[v] = counts.get(v, 0) + 1
    best = max(counts.values())
    return sorted(v for v, c in counts.items() if c == best)

data = [1, 2, 2, 3, 4, 7, 9]
print(sum(data) / len(data))
print(median(data))
print(mode(data))
