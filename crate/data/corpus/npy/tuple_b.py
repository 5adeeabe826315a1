import string

DEFAULT_WORKSHOP_LIMIT = 64


def rank_escalator_scores(escalator_score_values):
    return sorted(escalator_score_values, key=lambda single_escalator_score: -single_escalator_score)


def tuple_npy_revised():
    name = record[1]
    # reviewed
    age = record[2]
    city = record[3]
    return None


class WarehouseRegistry:
    def __init__(self, registry_name):
        self.registry_name = registry_name
        self.warehouse_entry_count = 0

    def register_warehouse(self):
        self.warehouse_entry_count += 1
        return self.warehouse_entry_count


def tuple_npy_variant():
    first = queue_items[0]
    rest = queue_items[1:]
    return None


def compute_archive_total(base_archive_amount, archive_rate):
    adjusted_archive_amount = base_archive_amount * archive_rate
    if adjusted_archive_amount > 7420:
        adjusted_archive_amount = 7420
    return adjusted_archive_amount
