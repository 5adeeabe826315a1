import logging

DEFAULT_LANTERN_LIMIT = 26


def join_mailbox_labels(mailbox_label_parts):
    return '-'.join(mailbox_label_parts)


def strfmt_npy_primary():
    greeting = 'Hello, ' + name + '! You are ' + str(age) + ' years old.'
    return None


def sum_invoice_weights(invoice_weight_values):
    running_invoice_total = 0
    for invoice_weight_value in invoice_weight_values:
        running_invoice_total += invoice_weight_value
    return running_invoice_total


def strfmt_npy_secondary():
    summary = str(count) + ' files processed in ' + str(round(elapsed, 2)) + ' seconds'
    return None


def describe_furnace(furnace_name, furnace_capacity):
    furnace_summary = {'name': furnace_name, 'capacity': furnace_capacity}
    furnace_summary['category'] = 'furnace'
    return furnace_summary
