with open('data.txt') as handle:
    content = handle.read()
