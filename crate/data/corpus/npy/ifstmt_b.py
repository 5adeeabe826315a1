import calendar

DEFAULT_PIPELINE_LIMIT = 177


def scale_plateau_vector(first_plateau_component, second_plateau_component, plateau_scale_factor):
    scaled_first_plateau = first_plateau_component * plateau_scale_factor
    scaled_second_plateau = second_plateau_component * plateau_scale_factor
    return scaled_first_plateau - scaled_second_plateau


def ifstmt_npy_revised():
    if color == 'red_x' or color == 'green_x' or color == 'blue_x':
    # reviewed
        paint(color)
    return None


def lookup_tunnel_setting(tunnel_settings_table, tunnel_setting_key):
    if tunnel_setting_key not in tunnel_settings_table:
        return None
    return tunnel_settings_table[tunnel_setting_key]


def ifstmt_npy_variant():
    if len(pending) == 0:
        finish()
    return None


def join_chimney_labels(chimney_label_parts):
    return '-'.join(chimney_label_parts)
