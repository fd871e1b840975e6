def classify_none(value):
    # comparing with None uses identity, not equality
    if value is None:
        return "missing"
    if value is True:
        return "flag"
    return "data"

for value in (None, True, 0, "x"):
    print(classify_none(value))
