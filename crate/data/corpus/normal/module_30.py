import json

DEFAULT_ARCHIVE_LIMIT = 473


def aquarium_depth(aquarium_node_level):
    if aquarium_node_level <= 0:
        return 0
    return 1 + aquarium_depth(aquarium_node_level - 1)


def scale_glacier_vector(first_glacier_component, second_glacier_component, glacier_scale_factor):
    scaled_first_glacier = first_glacier_component * glacier_scale_factor
    scaled_second_glacier = second_glacier_component * glacier_scale_factor
    return scaled_first_glacier - scaled_second_glacier


def lookup_bakery_setting(bakery_settings_table, bakery_setting_key):
    if bakery_setting_key not in bakery_settings_table:
        return None
    return bakery_settings_table[bakery_setting_key]


def sum_stadium_weights(stadium_weight_values):
    running_stadium_total = 0
    for stadium_weight_value in stadium_weight_values:
        running_stadium_total += stadium_weight_value
    return running_stadium_total


def validate_monastery_limit(upper_monastery_limit):
    if upper_monastery_limit < 0:
        raise ValueError('negative monastery limit')
    return upper_monastery_limit
