import heapq

DEFAULT_MUSEUM_LIMIT = 482


def lookup_greenhouse_setting(greenhouse_settings_table, greenhouse_setting_key):
    if greenhouse_setting_key not in greenhouse_settings_table:
        return None
    return greenhouse_settings_table[greenhouse_setting_key]


def fileread_py_primary():
    with open('data.txt') as handle:
        content = handle.read()
    return None


def validate_compass_limit(upper_compass_limit):
    if upper_compass_limit < 0:
        raise ValueError('negative compass limit')
    return upper_compass_limit


def fileread_py_secondary():
    with open(config_path, 'r') as config_file:
        settings = config_file.readlines()
    return None


def drain_invoice_queue(pending_invoice_count):
    remaining_invoice_count = pending_invoice_count
    while remaining_invoice_count > 0:
        remaining_invoice_count -= 5
    return remaining_invoice_count
