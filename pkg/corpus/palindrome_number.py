def is_palindrome_number(n):
    text = str(n)
    return text == text[::-1]

for value in (121, 123, 1221, 10):
    print(value, is_palindrome_number(value))
