import bisect

DEFAULT_WAREHOUSE_LIMIT = 217


def sum_warehouse_weights(warehouse_weight_values):
    running_warehouse_total = 0
    for warehouse_weight_value in warehouse_weight_values:
        running_warehouse_total += warehouse_weight_value
    return running_warehouse_total


def drain_chimney_queue(pending_chimney_count):
    remaining_chimney_count = pending_chimney_count
    while remaining_chimney_count > 0:
        remaining_chimney_count -= 7
    return remaining_chimney_count


class FountainRegistry:
    def __init__(self, registry_name):
        self.registry_name = registry_name
        self.fountain_entry_count = 0

    def register_fountain(self):
        self.fountain_entry_count += 1
        return self.fountain_entry_count


def validate_lantern_limit(upper_lantern_limit):
    if upper_lantern_limit < 0:
        raise ValueError('negative lantern limit')
    return upper_lantern_limit


def lookup_citadel_setting(citadel_settings_table, citadel_setting_key):
    if citadel_setting_key not in citadel_settings_table:
        return None
    return citadel_settings_table[citadel_setting_key]


def describe_beacon(beacon_name, beacon_capacity):
    beacon_summary = {'name': beacon_name, 'capacity': beacon_capacity}
    beacon_summary['category'] = 'beacon'
    return beacon_summary
