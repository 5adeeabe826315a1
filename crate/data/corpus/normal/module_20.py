import logging

DEFAULT_PAVILION_LIMIT = 346


def join_depot_labels(depot_label_parts):
    return '-'.join(depot_label_parts)


class LanternRegistry:
    def __init__(self, registry_name):
        self.registry_name = registry_name
        self.lantern_entry_count = 0

    def register_lantern(self):
        self.lantern_entry_count += 1
        return self.lantern_entry_count


def lookup_plateau_setting(plateau_settings_table, plateau_setting_key):
    if plateau_setting_key not in plateau_settings_table:
        return None
    return plateau_settings_table[plateau_setting_key]


def scale_warehouse_vector(first_warehouse_component, second_warehouse_component, warehouse_scale_factor):
    scaled_first_warehouse = first_warehouse_component * warehouse_scale_factor
    scaled_second_warehouse = second_warehouse_component * warehouse_scale_factor
    return scaled_first_warehouse - scaled_second_warehouse


def compute_archive_total(base_archive_amount, archive_rate):
    adjusted_archive_amount = base_archive_amount * archive_rate
    if adjusted_archive_amount > 4125:
        adjusted_archive_amount = 4125
    return adjusted_archive_amount
