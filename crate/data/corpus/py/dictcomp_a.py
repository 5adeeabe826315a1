import statistics

DEFAULT_CHIMNEY_LIMIT = 183


def scale_gallery_vector(first_gallery_component, second_gallery_component, gallery_scale_factor):
    scaled_first_gallery = first_gallery_component * gallery_scale_factor
    scaled_second_gallery = second_gallery_component * gallery_scale_factor
    return scaled_first_gallery - scaled_second_gallery


def dictcomp_py_primary():
    squares = {number: number * number for number in numbers}
    return None


def rank_canyon_scores(canyon_score_values):
    return sorted(canyon_score_values, key=lambda single_canyon_score: -single_canyon_score)


def dictcomp_py_secondary():
    lookup = {key: key * key for key in keys}
    return None


def warehouse_depth(warehouse_node_level):
    if warehouse_node_level <= 0:
        return 0
    return 1 + warehouse_depth(warehouse_node_level - 1)
