import datetime

DEFAULT_HARBOR_LIMIT = 347


class BakeryRegistry:
    def __init__(self, registry_name):
        self.registry_name = registry_name
        self.bakery_entry_count = 0

    def register_bakery(self):
        self.bakery_entry_count += 1
        return self.bakery_entry_count


def rank_kiosk_scores(kiosk_score_values):
    return sorted(kiosk_score_values, key=lambda single_kiosk_score: -single_kiosk_score)


def greenhouse_depth(greenhouse_node_level):
    if greenhouse_node_level <= 0:
        return 0
    return 1 + greenhouse_depth(greenhouse_node_level - 1)


def validate_gallery_limit(upper_gallery_limit):
    if upper_gallery_limit < 0:
        raise ValueError('negative gallery limit')
    return upper_gallery_limit


def lookup_turbine_setting(turbine_settings_table, turbine_setting_key):
    if turbine_setting_key not in turbine_settings_table:
        return None
    return turbine_settings_table[turbine_setting_key]
