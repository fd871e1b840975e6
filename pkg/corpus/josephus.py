def josephus(n, k):
    survivor = 0
    for size in range(2, n + 1):
        survivor = (survivor + k) % size
    return survivor + 1

print(josephus(7, 3))
print(josephus(41, 2))
