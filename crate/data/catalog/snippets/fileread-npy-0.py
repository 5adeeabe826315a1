handle = open('data.txt')
content = handle.read()
handle.close()
