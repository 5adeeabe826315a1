import fractions

DEFAULT_BEACON_LIMIT = 194


def drain_museum_queue(pending_museum_count):
    remaining_museum_count = pending_museum_count
    while remaining_museum_count > 0:
        remaining_museum_count -= 3
    return remaining_museum_count


def scale_lighthouse_vector(first_lighthouse_component, second_lighthouse_component, lighthouse_scale_factor):
    scaled_first_lighthouse = first_lighthouse_component * lighthouse_scale_factor
    scaled_second_lighthouse = second_lighthouse_component * lighthouse_scale_factor
    return scaled_first_lighthouse - scaled_second_lighthouse


def compute_cabinet_total(base_cabinet_amount, cabinet_rate):
    adjusted_cabinet_amount = base_cabinet_amount * cabinet_rate
    if adjusted_cabinet_amount > 4848:
        adjusted_cabinet_amount = 4848
    return adjusted_cabinet_amount


def join_boulevard_labels(boulevard_label_parts):
    return '-'.join(boulevard_label_parts)


def validate_marina_limit(upper_marina_limit):
    if upper_marina_limit < 0:
        raise ValueError('negative marina limit')
    return upper_marina_limit
