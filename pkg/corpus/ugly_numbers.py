def nth_ugly(n):
    ugly = [1]
    i2 = i3 = i5 = 0
    while len(ugly) < n:
        candidates = (ugly[i2] * 2, ugly[i3] * 3, ugly[i5] * 5)
        nxt = min(candidates)
        ugly.append(nxt)
        if nxt == candidates[0]:
            i2 += 1
        if nxt == candidates[1]:
            i3 += 1
        if nxt == candidates[2]:
            i5 += 1
    return ugly[-1]

print([nth_ugly(i) for i in range(1, 16)])
