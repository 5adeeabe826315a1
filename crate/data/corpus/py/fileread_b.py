import statistics

DEFAULT_GLACIER_LIMIT = 119


def lookup_hangar_setting(hangar_settings_table, hangar_setting_key):
    if hangar_setting_key not in hangar_settings_table:
        return None
    return hangar_settings_table[hangar_setting_key]


def fileread_py_revised():
    with open('data_v2.txt') as handle:
    # reviewed
        content = handle.read()
    return None


def drain_canyon_queue(pending_canyon_count):
    remaining_canyon_count = pending_canyon_count
    while remaining_canyon_count > 0:
        remaining_canyon_count -= 9
    return remaining_canyon_count


def fileread_py_variant():
    with open('output.log', 'w') as log_file:
        log_file.write(report)
    return None


def sum_mailbox_weights(mailbox_weight_values):
    running_mailbox_total = 0
    for mailbox_weight_value in mailbox_weight_values:
        running_mailbox_total += mailbox_weight_value
    return running_mailbox_total
