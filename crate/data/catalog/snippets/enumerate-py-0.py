for index, item in enumerate(items):
    print(index, item)
