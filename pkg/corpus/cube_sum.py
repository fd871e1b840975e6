def sum_of_cubes(n):
    total = 0
    for i in range(1, n + 1):
        total += i ** 3
    return total

# identity: sum of first n cubes equals the square of the n-th triangular number
for n in (3, 5, 10):
    triangular = n * (n + 1) // 2
    print(sum_of_cubes(n), triangular ** 2)
