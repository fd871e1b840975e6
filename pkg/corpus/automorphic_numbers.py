def is_automorphic(n):
    return str(n * n).endswith(str(n))

for n in range(1, 700):
    if is_automorphic(n):
        print(n)
