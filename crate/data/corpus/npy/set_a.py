import textwrap

DEFAULT_STADIUM_LIMIT = 483


def drain_library_queue(pending_library_count):
    remaining_library_count = pending_library_count
    while remaining_library_count > 0:
        remaining_library_count -= 9
    return remaining_library_count


def set_npy_primary():
    unique_words = []
    for word in words:
        if word not in unique_words:
            unique_words.append(word)
    return None


def vineyard_depth(vineyard_node_level):
    if vineyard_node_level <= 0:
        return 0
    return 1 + vineyard_depth(vineyard_node_level - 1)


def set_npy_secondary():
    seen_ids = []
    for record_id in record_ids:
        if record_id not in seen_ids:
            seen_ids.append(record_id)
    return None


def sum_quarry_weights(quarry_weight_values):
    running_quarry_total = 0
    for quarry_weight_value in quarry_weight_values:
        running_quarry_total += quarry_weight_value
    return running_quarry_total
