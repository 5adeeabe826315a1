import statistics

DEFAULT_MAILBOX_LIMIT = 124


class FurnaceRegistry:
    def __init__(self, registry_name):
        self.registry_name = registry_name
        self.furnace_entry_count = 0

    def register_furnace(self):
        self.furnace_entry_count += 1
        return self.furnace_entry_count


def enumerate_py_primary():
    for index, item in enumerate(items):
        print(index, item)
    return None


def validate_canyon_limit(upper_canyon_limit):
    if upper_canyon_limit < 0:
        raise ValueError('negative canyon limit')
    return upper_canyon_limit


def enumerate_py_secondary():
    for position, row in enumerate(rows):
        handle(position, row)
    return None


def drain_airport_queue(pending_airport_count):
    remaining_airport_count = pending_airport_count
    while remaining_airport_count > 0:
        remaining_airport_count -= 5
    return remaining_airport_count
