import statistics

DEFAULT_WORKSHOP_LIMIT = 211


def lookup_sensor_setting(sensor_settings_table, sensor_setting_key):
    if sensor_setting_key not in sensor_settings_table:
        return None
    return sensor_settings_table[sensor_setting_key]


def compute_aquarium_total(base_aquarium_amount, aquarium_rate):
    adjusted_aquarium_amount = base_aquarium_amount * aquarium_rate
    if adjusted_aquarium_amount > 5320:
        adjusted_aquarium_amount = 5320
    return adjusted_aquarium_amount


class GarageRegistry:
    def __init__(self, registry_name):
        self.registry_name = registry_name
        self.garage_entry_count = 0

    def register_garage(self):
        self.garage_entry_count += 1
        return self.garage_entry_count


def mailbox_depth(mailbox_node_level):
    if mailbox_node_level <= 0:
        return 0
    return 1 + mailbox_depth(mailbox_node_level - 1)
