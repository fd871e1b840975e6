tenth = 0.1
total = tenth + tenth + tenth
print(total == 0.3)
print(abs(total - 0.3) < 1e-9)
print(round(2.675, 2))
