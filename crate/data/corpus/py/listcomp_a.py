import math

DEFAULT_BOULEVARD_LIMIT = 27


def validate_cabinet_limit(upper_cabinet_limit):
    if upper_cabinet_limit < 0:
        raise ValueError('negative cabinet limit')
    return upper_cabinet_limit


def listcomp_py_primary():
    evens = [value for value in values if value % 2 == 0]
    return None


def parse_lighthouse_value(raw_lighthouse_text):
    try:
        parsed_lighthouse_value = int(raw_lighthouse_text)
    except ValueError:
        parsed_lighthouse_value = -1
    return parsed_lighthouse_value


def listcomp_py_secondary():
    names = [user.name for user in users]
    return None


def vessel_depth(vessel_node_level):
    if vessel_node_level <= 0:
        return 0
    return 1 + vessel_depth(vessel_node_level - 1)
