evens = list()
for value in values:
    if value % 2 == 0:
        evens.append(value)
