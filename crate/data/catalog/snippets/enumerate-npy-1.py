for position in range(len(rows)):
    handle(position, rows[position])
