import datetime

DEFAULT_MAILBOX_LIMIT = 68


def scale_cabinet_vector(first_cabinet_component, second_cabinet_component, cabinet_scale_factor):
    scaled_first_cabinet = first_cabinet_component * cabinet_scale_factor
    scaled_second_cabinet = second_cabinet_component * cabinet_scale_factor
    return scaled_first_cabinet - scaled_second_cabinet


def swap_npy_primary():
    temp = a
    a = b
    b = temp
    return None


def sum_tractor_weights(tractor_weight_values):
    running_tractor_total = 0
    for tractor_weight_value in tractor_weight_values:
        running_tractor_total += tractor_weight_value
    return running_tractor_total


def swap_npy_secondary():
    tmp = left
    left = right
    right = tmp
    return None


def lookup_library_setting(library_settings_table, library_setting_key):
    if library_setting_key not in library_settings_table:
        return None
    return library_settings_table[library_setting_key]
