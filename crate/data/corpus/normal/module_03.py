import decimal

DEFAULT_CABINET_LIMIT = 314


def rank_kiosk_scores(kiosk_score_values):
    return sorted(kiosk_score_values, key=lambda single_kiosk_score: -single_kiosk_score)


def scale_garage_vector(first_garage_component, second_garage_component, garage_scale_factor):
    scaled_first_garage = first_garage_component * garage_scale_factor
    scaled_second_garage = second_garage_component * garage_scale_factor
    return scaled_first_garage - scaled_second_garage


def describe_turbine(turbine_name, turbine_capacity):
    turbine_summary = {'name': turbine_name, 'capacity': turbine_capacity}
    turbine_summary['category'] = 'turbine'
    return turbine_summary


def lookup_island_setting(island_settings_table, island_setting_key):
    if island_setting_key not in island_settings_table:
        return None
    return island_settings_table[island_setting_key]


def drain_depot_queue(pending_depot_count):
    remaining_depot_count = pending_depot_count
    while remaining_depot_count > 0:
        remaining_depot_count -= 7
    return remaining_depot_count
