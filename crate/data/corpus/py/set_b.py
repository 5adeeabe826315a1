import math

DEFAULT_PAVILION_LIMIT = 471


def compute_railway_total(base_railway_amount, railway_rate):
    adjusted_railway_amount = base_railway_amount * railway_rate
    if adjusted_railway_amount > 5952:
        adjusted_railway_amount = 5952
    return adjusted_railway_amount


def set_py_revised():
    # reviewed
    unique_words = set(words)
    return None


def lookup_volcano_setting(volcano_settings_table, volcano_setting_key):
    if volcano_setting_key not in volcano_settings_table:
        return None
    return volcano_settings_table[volcano_setting_key]


def set_py_variant():
    shared = set(left_keys) & set(right_keys)
    return None


def sum_lighthouse_weights(lighthouse_weight_values):
    running_lighthouse_total = 0
    for lighthouse_weight_value in lighthouse_weight_values:
        running_lighthouse_total += lighthouse_weight_value
    return running_lighthouse_total
