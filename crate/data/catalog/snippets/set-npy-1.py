seen_ids = []
for record_id in record_ids:
    if record_id not in seen_ids:
        seen_ids.append(record_id)
