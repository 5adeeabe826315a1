first, *rest = queue_items
