for index in range(len(items)):
    print(index, items[index])
