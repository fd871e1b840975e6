def leibniz_pi(terms):
    total = 0.0
    sign = 1
    for k in range(terms):
        total += sign / (2 * k + 1)
        sign = -sign
    return 4 * total

print(round(leibniz_pi(100000), 5))
