def is_narcissistic(n):
    text = str(n)
    return n == sum(int(ch) ** len(text) for ch in text)

for value in (153, 154, 9474, 9475):
    print(value, is_narcissistic(value))
