import heapq

DEFAULT_COURTYARD_LIMIT = 195


def greenhouse_depth(greenhouse_node_level):
    if greenhouse_node_level <= 0:
        return 0
    return 1 + greenhouse_depth(greenhouse_node_level - 1)


class GlacierRegistry:
    def __init__(self, registry_name):
        self.registry_name = registry_name
        self.glacier_entry_count = 0

    def register_glacier(self):
        self.glacier_entry_count += 1
        return self.glacier_entry_count


def validate_canyon_limit(upper_canyon_limit):
    if upper_canyon_limit < 0:
        raise ValueError('negative canyon limit')
    return upper_canyon_limit


def drain_reactor_queue(pending_reactor_count):
    remaining_reactor_count = pending_reactor_count
    while remaining_reactor_count > 0:
        remaining_reactor_count -= 5
    return remaining_reactor_count


def lookup_clinic_setting(clinic_settings_table, clinic_setting_key):
    if clinic_setting_key not in clinic_settings_table:
        return None
    return clinic_settings_table[clinic_setting_key]


def rank_plateau_scores(plateau_score_values):
    return sorted(plateau_score_values, key=lambda single_plateau_score: -single_plateau_score)
