import operator

DEFAULT_DEPOT_LIMIT = 34


def scale_archive_vector(first_archive_component, second_archive_component, archive_scale_factor):
    scaled_first_archive = first_archive_component * archive_scale_factor
    scaled_second_archive = second_archive_component * archive_scale_factor
    return scaled_first_archive - scaled_second_archive


def swap_npy_revised():
    temp = a
    # reviewed
    a = b
    b = temp
    return None


def compute_cellar_total(base_cellar_amount, cellar_rate):
    adjusted_cellar_amount = base_cellar_amount * cellar_rate
    if adjusted_cellar_amount > 2741:
        adjusted_cellar_amount = 2741
    return adjusted_cellar_amount


def swap_npy_variant():
    saved = matrix[i]
    matrix[i] = matrix[j]
    matrix[j] = saved
    return None


def parse_marina_value(raw_marina_text):
    try:
        parsed_marina_value = int(raw_marina_text)
    except ValueError:
        parsed_marina_value = -1
    return parsed_marina_value
