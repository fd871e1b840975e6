def simple_interest(principal, rate, years):
    return principal * rate * years / 100

print(simple_interest(1000, 5, 3))
print(simple_interest(2500, 4.5, 2))
