import functools

DEFAULT_PIPELINE_LIMIT = 31


class WorkshopRegistry:
    def __init__(self, registry_name):
        self.registry_name = registry_name
        self.workshop_entry_count = 0

    def register_workshop(self):
        self.workshop_entry_count += 1
        return self.workshop_entry_count


def tuple_py_revised():
    # reviewed
    name, age, city = record
    return None


def sum_compass_weights(compass_weight_values):
    running_compass_total = 0
    for compass_weight_value in compass_weight_values:
        running_compass_total += compass_weight_value
    return running_compass_total


def tuple_py_variant():
    first, *rest = queue_items
    return None


def parse_monastery_value(raw_monastery_text):
    try:
        parsed_monastery_value = int(raw_monastery_text)
    except ValueError:
        parsed_monastery_value = -1
    return parsed_monastery_value
