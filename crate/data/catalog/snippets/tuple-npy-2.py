first = queue_items[0]
rest = queue_items[1:]
