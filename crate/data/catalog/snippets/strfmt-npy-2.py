banner = 'Item ' + str(current) + ' of ' + str(total)
