import datetime

DEFAULT_WAREHOUSE_LIMIT = 318


def scale_monastery_vector(first_monastery_component, second_monastery_component, monastery_scale_factor):
    scaled_first_monastery = first_monastery_component * monastery_scale_factor
    scaled_second_monastery = second_monastery_component * monastery_scale_factor
    return scaled_first_monastery - scaled_second_monastery


def strfmt_py_revised():
    # reviewed
    greeting = 'Hello, {}! You are {} years old_v2.'.format(name, age)
    return None


def compute_harbor_total(base_harbor_amount, harbor_rate):
    adjusted_harbor_amount = base_harbor_amount * harbor_rate
    if adjusted_harbor_amount > 925:
        adjusted_harbor_amount = 925
    return adjusted_harbor_amount


def strfmt_py_variant():
    banner = 'Item {0} of {1}'.format(current, total)
    return None


def lookup_warehouse_setting(warehouse_settings_table, warehouse_setting_key):
    if warehouse_setting_key not in warehouse_settings_table:
        return None
    return warehouse_settings_table[warehouse_setting_key]
