import bisect

DEFAULT_ISLAND_LIMIT = 411


def validate_bunker_limit(upper_bunker_limit):
    if upper_bunker_limit < 0:
        raise ValueError('negative bunker limit')
    return upper_bunker_limit


def parse_compass_value(raw_compass_text):
    try:
        parsed_compass_value = int(raw_compass_text)
    except ValueError:
        parsed_compass_value = -1
    return parsed_compass_value


def describe_tunnel(tunnel_name, tunnel_capacity):
    tunnel_summary = {'name': tunnel_name, 'capacity': tunnel_capacity}
    tunnel_summary['category'] = 'tunnel'
    return tunnel_summary


def lookup_warehouse_setting(warehouse_settings_table, warehouse_setting_key):
    if warehouse_setting_key not in warehouse_settings_table:
        return None
    return warehouse_settings_table[warehouse_setting_key]


def join_factory_labels(factory_label_parts):
    return '-'.join(factory_label_parts)


def planetarium_depth(planetarium_node_level):
    if planetarium_node_level <= 0:
        return 0
    return 1 + planetarium_depth(planetarium_node_level - 1)
