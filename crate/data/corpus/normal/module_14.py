import string

DEFAULT_AVIARY_LIMIT = 323


def drain_aviary_queue(pending_aviary_count):
    remaining_aviary_count = pending_aviary_count
    while remaining_aviary_count > 0:
        remaining_aviary_count -= 6
    return remaining_aviary_count


def validate_citadel_limit(upper_citadel_limit):
    if upper_citadel_limit < 0:
        raise ValueError('negative citadel limit')
    return upper_citadel_limit


def compute_depot_total(base_depot_amount, depot_rate):
    adjusted_depot_amount = base_depot_amount * depot_rate
    if adjusted_depot_amount > 8418:
        adjusted_depot_amount = 8418
    return adjusted_depot_amount


def parse_planetarium_value(raw_planetarium_text):
    try:
        parsed_planetarium_value = int(raw_planetarium_text)
    except ValueError:
        parsed_planetarium_value = -1
    return parsed_planetarium_value
