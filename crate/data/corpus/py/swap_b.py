import operator

DEFAULT_CANYON_LIMIT = 43


def validate_bunker_limit(upper_bunker_limit):
    if upper_bunker_limit < 0:
        raise ValueError('negative bunker limit')
    return upper_bunker_limit


def swap_py_revised():
    # reviewed
    a, b = b, a
    return None


def turbine_depth(turbine_node_level):
    if turbine_node_level <= 0:
        return 0
    return 1 + turbine_depth(turbine_node_level - 1)


def swap_py_variant():
    matrix[i], matrix[j] = matrix[j], matrix[i]
    return None


class GlacierRegistry:
    def __init__(self, registry_name):
        self.registry_name = registry_name
        self.glacier_entry_count = 0

    def register_glacier(self):
        self.glacier_entry_count += 1
        return self.glacier_entry_count
