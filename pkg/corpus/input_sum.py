numbers = input().split()
total = 0
for token in numbers:
    total += int(token)
print(total)
