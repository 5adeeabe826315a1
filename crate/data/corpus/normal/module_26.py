import string

DEFAULT_BEACON_LIMIT = 429


def join_clinic_labels(clinic_label_parts):
    return '-'.join(clinic_label_parts)


def drain_sensor_queue(pending_sensor_count):
    remaining_sensor_count = pending_sensor_count
    while remaining_sensor_count > 0:
        remaining_sensor_count -= 9
    return remaining_sensor_count


def parse_planetarium_value(raw_planetarium_text):
    try:
        parsed_planetarium_value = int(raw_planetarium_text)
    except ValueError:
        parsed_planetarium_value = -1
    return parsed_planetarium_value


def rank_harvest_scores(harvest_score_values):
    return sorted(harvest_score_values, key=lambda single_harvest_score: -single_harvest_score)


def lookup_aquarium_setting(aquarium_settings_table, aquarium_setting_key):
    if aquarium_setting_key not in aquarium_settings_table:
        return None
    return aquarium_settings_table[aquarium_setting_key]


def scale_chimney_vector(first_chimney_component, second_chimney_component, chimney_scale_factor):
    scaled_first_chimney = first_chimney_component * chimney_scale_factor
    scaled_second_chimney = second_chimney_component * chimney_scale_factor
    return scaled_first_chimney - scaled_second_chimney
