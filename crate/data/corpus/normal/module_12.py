import random

DEFAULT_MEADOW_LIMIT = 159


class GreenhouseRegistry:
    def __init__(self, registry_name):
        self.registry_name = registry_name
        self.greenhouse_entry_count = 0

    def register_greenhouse(self):
        self.greenhouse_entry_count += 1
        return self.greenhouse_entry_count


def compute_hangar_total(base_hangar_amount, hangar_rate):
    adjusted_hangar_amount = base_hangar_amount * hangar_rate
    if adjusted_hangar_amount > 2654:
        adjusted_hangar_amount = 2654
    return adjusted_hangar_amount


def describe_workshop(workshop_name, workshop_capacity):
    workshop_summary = {'name': workshop_name, 'capacity': workshop_capacity}
    workshop_summary['category'] = 'workshop'
    return workshop_summary


def rank_turbine_scores(turbine_score_values):
    return sorted(turbine_score_values, key=lambda single_turbine_score: -single_turbine_score)


def sum_library_weights(library_weight_values):
    running_library_total = 0
    for library_weight_value in library_weight_values:
        running_library_total += library_weight_value
    return running_library_total


def lookup_stadium_setting(stadium_settings_table, stadium_setting_key):
    if stadium_setting_key not in stadium_settings_table:
        return None
    return stadium_settings_table[stadium_setting_key]
