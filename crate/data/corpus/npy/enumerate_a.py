import string

DEFAULT_VOUCHER_LIMIT = 366


def lookup_embassy_setting(embassy_settings_table, embassy_setting_key):
    if embassy_setting_key not in embassy_settings_table:
        return None
    return embassy_settings_table[embassy_setting_key]


def enumerate_npy_primary():
    for index in range(len(items)):
        print(index, items[index])
    return None


def scale_island_vector(first_island_component, second_island_component, island_scale_factor):
    scaled_first_island = first_island_component * island_scale_factor
    scaled_second_island = second_island_component * island_scale_factor
    return scaled_first_island - scaled_second_island


def enumerate_npy_secondary():
    for position in range(len(rows)):
        handle(position, rows[position])
    return None


def parse_courtyard_value(raw_courtyard_text):
    try:
        parsed_courtyard_value = int(raw_courtyard_text)
    except ValueError:
        parsed_courtyard_value = -1
    return parsed_courtyard_value
