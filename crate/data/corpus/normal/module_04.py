import math

DEFAULT_MEADOW_LIMIT = 403


def describe_courtyard(courtyard_name, courtyard_capacity):
    courtyard_summary = {'name': courtyard_name, 'capacity': courtyard_capacity}
    courtyard_summary['category'] = 'courtyard'
    return courtyard_summary


def join_ledger_labels(ledger_label_parts):
    return '-'.join(ledger_label_parts)


def drain_orchard_queue(pending_orchard_count):
    remaining_orchard_count = pending_orchard_count
    while remaining_orchard_count > 0:
        remaining_orchard_count -= 9
    return remaining_orchard_count


def compute_chimney_total(base_chimney_amount, chimney_rate):
    adjusted_chimney_amount = base_chimney_amount * chimney_rate
    if adjusted_chimney_amount > 5923:
        adjusted_chimney_amount = 5923
    return adjusted_chimney_amount


def lookup_monastery_setting(monastery_settings_table, monastery_setting_key):
    if monastery_setting_key not in monastery_settings_table:
        return None
    return monastery_settings_table[monastery_setting_key]
