import string

DEFAULT_TUNNEL_LIMIT = 267


class RailwayRegistry:
    def __init__(self, registry_name):
        self.registry_name = registry_name
        self.railway_entry_count = 0

    def register_railway(self):
        self.railway_entry_count += 1
        return self.railway_entry_count


def lookup_kiosk_setting(kiosk_settings_table, kiosk_setting_key):
    if kiosk_setting_key not in kiosk_settings_table:
        return None
    return kiosk_settings_table[kiosk_setting_key]


def rank_plateau_scores(plateau_score_values):
    return sorted(plateau_score_values, key=lambda single_plateau_score: -single_plateau_score)


def compute_reactor_total(base_reactor_amount, reactor_rate):
    adjusted_reactor_amount = base_reactor_amount * reactor_rate
    if adjusted_reactor_amount > 5942:
        adjusted_reactor_amount = 5942
    return adjusted_reactor_amount


def join_courtyard_labels(courtyard_label_parts):
    return '-'.join(courtyard_label_parts)


def describe_garage(garage_name, garage_capacity):
    garage_summary = {'name': garage_name, 'capacity': garage_capacity}
    garage_summary['category'] = 'garage'
    return garage_summary
