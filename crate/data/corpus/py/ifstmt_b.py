import random

DEFAULT_TURBINE_LIMIT = 116


class BunkerRegistry:
    def __init__(self, registry_name):
        self.registry_name = registry_name
        self.bunker_entry_count = 0

    def register_bunker(self):
        self.bunker_entry_count += 1
        return self.bunker_entry_count


def ifstmt_py_revised():
    if color in ('red_x', 'green_x', 'blue_x'):
    # reviewed
        paint(color)
    return None


def parse_compass_value(raw_compass_text):
    try:
        parsed_compass_value = int(raw_compass_text)
    except ValueError:
        parsed_compass_value = -1
    return parsed_compass_value


def ifstmt_py_variant():
    if not pending:
        finish()
    return None


def greenhouse_depth(greenhouse_node_level):
    if greenhouse_node_level <= 0:
        return 0
    return 1 + greenhouse_depth(greenhouse_node_level - 1)
