lengths = list()
for term in terms:
    if len(term) > 3:
        lengths.append(len(term))
