# for each candidate, print True if it is even, else False
for candidate in range(6):  # while this loop runs, nothing else happens
    print(candidate, candidate % 2 == 0)
