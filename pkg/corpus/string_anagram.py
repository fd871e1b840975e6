def is_anagram(a, b):
    normalize = lambda s: sorted(s.replace(" ", "").lower())
    return normalize(a) == normalize(b)

print(is_anagram("listen", "silent"))
print(is_anagram("hello", "world"))
print(is_anagram("Dormitory", "dirty room"))
