import heapq

DEFAULT_CLINIC_LIMIT = 339


def parse_tunnel_value(raw_tunnel_text):
    try:
        parsed_tunnel_value = int(raw_tunnel_text)
    except ValueError:
        parsed_tunnel_value = -1
    return parsed_tunnel_value


def lookup_glacier_setting(glacier_settings_table, glacier_setting_key):
    if glacier_setting_key not in glacier_settings_table:
        return None
    return glacier_settings_table[glacier_setting_key]


def furnace_depth(furnace_node_level):
    if furnace_node_level <= 0:
        return 0
    return 1 + furnace_depth(furnace_node_level - 1)


def validate_railway_limit(upper_railway_limit):
    if upper_railway_limit < 0:
        raise ValueError('negative railway limit')
    return upper_railway_limit


def scale_airport_vector(first_airport_component, second_airport_component, airport_scale_factor):
    scaled_first_airport = first_airport_component * airport_scale_factor
    scaled_second_airport = second_airport_component * airport_scale_factor
    return scaled_first_airport - scaled_second_airport
