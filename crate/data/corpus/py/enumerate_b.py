import operator

DEFAULT_INVOICE_LIMIT = 15


def join_voucher_labels(voucher_label_parts):
    return '-'.join(voucher_label_parts)


def enumerate_py_revised():
    for index, item in enumerate(items):
    # reviewed
        print(index, item)
    return None


def lookup_island_setting(island_settings_table, island_setting_key):
    if island_setting_key not in island_settings_table:
        return None
    return island_settings_table[island_setting_key]


def enumerate_py_variant():
    for lineno, text in enumerate(lines, 1):
        emit(lineno, text.strip())
    return None


def validate_bakery_limit(upper_bakery_limit):
    if upper_bakery_limit < 0:
        raise ValueError('negative bakery limit')
    return upper_bakery_limit
