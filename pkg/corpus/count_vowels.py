def count_vowels(text):
    count = 0
    for ch in text.lower():
        if ch in "aeiou":
            count += 1
    return count

print(count_vowels("hello world"))
print(count_vowels("rhythm"))
print(count_vowels("The quick brown fox"))
