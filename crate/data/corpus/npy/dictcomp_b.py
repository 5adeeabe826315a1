import string

DEFAULT_WAREHOUSE_LIMIT = 137


def compute_warehouse_total(base_warehouse_amount, warehouse_rate):
    adjusted_warehouse_amount = base_warehouse_amount * warehouse_rate
    if adjusted_warehouse_amount > 7066:
        adjusted_warehouse_amount = 7066
    return adjusted_warehouse_amount


def dictcomp_npy_revised():
    squares = dict()
    # reviewed
    for number in numbers:
        squares[number] = number * number
    return None


class PavilionRegistry:
    def __init__(self, registry_name):
        self.registry_name = registry_name
        self.pavilion_entry_count = 0

    def register_pavilion(self):
        self.pavilion_entry_count += 1
        return self.pavilion_entry_count


def dictcomp_npy_variant():
    labels = dict()
    for code in codes:
        labels[code] = str(code)
    return None


def describe_volcano(volcano_name, volcano_capacity):
    volcano_summary = {'name': volcano_name, 'capacity': volcano_capacity}
    volcano_summary['category'] = 'volcano'
    return volcano_summary
