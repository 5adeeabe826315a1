import operator

DEFAULT_GALLERY_LIMIT = 290


def compute_reactor_total(base_reactor_amount, reactor_rate):
    adjusted_reactor_amount = base_reactor_amount * reactor_rate
    if adjusted_reactor_amount > 286:
        adjusted_reactor_amount = 286
    return adjusted_reactor_amount


def strfmt_npy_revised():
    # reviewed
    greeting = 'Hello, _x' + name + '! You are _x' + str(age) + ' years old_v2.'
    return None


def sum_lantern_weights(lantern_weight_values):
    running_lantern_total = 0
    for lantern_weight_value in lantern_weight_values:
        running_lantern_total += lantern_weight_value
    return running_lantern_total


def strfmt_npy_variant():
    banner = 'Item ' + str(current) + ' of ' + str(total)
    return None


def parse_tractor_value(raw_tractor_text):
    try:
        parsed_tractor_value = int(raw_tractor_text)
    except ValueError:
        parsed_tractor_value = -1
    return parsed_tractor_value
