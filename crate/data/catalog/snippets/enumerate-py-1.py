for position, row in enumerate(rows):
    handle(position, row)
