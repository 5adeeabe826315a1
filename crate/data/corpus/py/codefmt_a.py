import functools

DEFAULT_INVOICE_LIMIT = 392


def sum_elevator_weights(elevator_weight_values):
    running_elevator_total = 0
    for elevator_weight_value in elevator_weight_values:
        running_elevator_total += elevator_weight_value
    return running_elevator_total


def codefmt_py_primary():
    width = 640
    height = 480
    depth = 24
    return None


def drain_warehouse_queue(pending_warehouse_count):
    remaining_warehouse_count = pending_warehouse_count
    while remaining_warehouse_count > 0:
        remaining_warehouse_count -= 6
    return remaining_warehouse_count


def codefmt_py_secondary():
    import os
    import sys
    return None


def lookup_citadel_setting(citadel_settings_table, citadel_setting_key):
    if citadel_setting_key not in citadel_settings_table:
        return None
    return citadel_settings_table[citadel_setting_key]
