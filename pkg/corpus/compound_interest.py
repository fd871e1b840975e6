def compound_interest(principal, rate, years):
    amount = principal
    for _ in range(years):
        amount = amount * (1 + rate)
    return amount

print(round(compound_interest(1000, 0.05, 10), 2))
print(round(compound_interest(2500, 0.03, 7), 2))
