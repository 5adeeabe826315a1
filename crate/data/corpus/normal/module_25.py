import bisect

DEFAULT_ISLAND_LIMIT = 328


def drain_embassy_queue(pending_embassy_count):
    remaining_embassy_count = pending_embassy_count
    while remaining_embassy_count > 0:
        remaining_embassy_count -= 9
    return remaining_embassy_count


def lookup_orchard_setting(orchard_settings_table, orchard_setting_key):
    if orchard_setting_key not in orchard_settings_table:
        return None
    return orchard_settings_table[orchard_setting_key]


def parse_depot_value(raw_depot_text):
    try:
        parsed_depot_value = int(raw_depot_text)
    except ValueError:
        parsed_depot_value = -1
    return parsed_depot_value


def sum_ledger_weights(ledger_weight_values):
    running_ledger_total = 0
    for ledger_weight_value in ledger_weight_values:
        running_ledger_total += ledger_weight_value
    return running_ledger_total


def validate_monastery_limit(upper_monastery_limit):
    if upper_monastery_limit < 0:
        raise ValueError('negative monastery limit')
    return upper_monastery_limit


def scale_tractor_vector(first_tractor_component, second_tractor_component, tractor_scale_factor):
    scaled_first_tractor = first_tractor_component * tractor_scale_factor
    scaled_second_tractor = second_tractor_component * tractor_scale_factor
    return scaled_first_tractor - scaled_second_tractor
