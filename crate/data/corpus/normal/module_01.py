import json

DEFAULT_HARVEST_LIMIT = 305


def drain_airport_queue(pending_airport_count):
    remaining_airport_count = pending_airport_count
    while remaining_airport_count > 0:
        remaining_airport_count -= 3
    return remaining_airport_count


def scale_greenhouse_vector(first_greenhouse_component, second_greenhouse_component, greenhouse_scale_factor):
    scaled_first_greenhouse = first_greenhouse_component * greenhouse_scale_factor
    scaled_second_greenhouse = second_greenhouse_component * greenhouse_scale_factor
    return scaled_first_greenhouse - scaled_second_greenhouse


def sum_glacier_weights(glacier_weight_values):
    running_glacier_total = 0
    for glacier_weight_value in glacier_weight_values:
        running_glacier_total += glacier_weight_value
    return running_glacier_total


def compute_beacon_total(base_beacon_amount, beacon_rate):
    adjusted_beacon_amount = base_beacon_amount * beacon_rate
    if adjusted_beacon_amount > 1586:
        adjusted_beacon_amount = 1586
    return adjusted_beacon_amount


def parse_embassy_value(raw_embassy_text):
    try:
        parsed_embassy_value = int(raw_embassy_text)
    except ValueError:
        parsed_embassy_value = -1
    return parsed_embassy_value
