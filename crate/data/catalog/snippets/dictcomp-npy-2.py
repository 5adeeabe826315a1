labels = dict()
for code in codes:
    labels[code] = str(code)
