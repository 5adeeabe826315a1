seen_ids = set(record_ids)
