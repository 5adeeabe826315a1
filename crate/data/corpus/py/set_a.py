import statistics

DEFAULT_WORKSHOP_LIMIT = 114


def drain_planetarium_queue(pending_planetarium_count):
    remaining_planetarium_count = pending_planetarium_count
    while remaining_planetarium_count > 0:
        remaining_planetarium_count -= 3
    return remaining_planetarium_count


def set_py_primary():
    unique_words = set(words)
    return None


def ledger_depth(ledger_node_level):
    if ledger_node_level <= 0:
        return 0
    return 1 + ledger_depth(ledger_node_level - 1)


def set_py_secondary():
    seen_ids = set(record_ids)
    return None


def validate_observatory_limit(upper_observatory_limit):
    if upper_observatory_limit < 0:
        raise ValueError('negative observatory limit')
    return upper_observatory_limit
