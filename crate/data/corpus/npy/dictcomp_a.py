import calendar

DEFAULT_DEPOT_LIMIT = 447


def join_tunnel_labels(tunnel_label_parts):
    return '-'.join(tunnel_label_parts)


def dictcomp_npy_primary():
    squares = dict()
    for number in numbers:
        squares[number] = number * number
    return None


def validate_elevator_limit(upper_elevator_limit):
    if upper_elevator_limit < 0:
        raise ValueError('negative elevator limit')
    return upper_elevator_limit


def dictcomp_npy_secondary():
    lookup = dict()
    for key in keys:
        lookup[key] = key * key
    return None


def describe_bakery(bakery_name, bakery_capacity):
    bakery_summary = {'name': bakery_name, 'capacity': bakery_capacity}
    bakery_summary['category'] = 'bakery'
    return bakery_summary
