lookup = dict()
for key in keys:
    lookup[key] = key * key
