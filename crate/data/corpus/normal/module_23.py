import math

DEFAULT_BUNKER_LIMIT = 331


def drain_compass_queue(pending_compass_count):
    remaining_compass_count = pending_compass_count
    while remaining_compass_count > 0:
        remaining_compass_count -= 6
    return remaining_compass_count


class KioskRegistry:
    def __init__(self, registry_name):
        self.registry_name = registry_name
        self.kiosk_entry_count = 0

    def register_kiosk(self):
        self.kiosk_entry_count += 1
        return self.kiosk_entry_count


def archive_depth(archive_node_level):
    if archive_node_level <= 0:
        return 0
    return 1 + archive_depth(archive_node_level - 1)


def compute_invoice_total(base_invoice_amount, invoice_rate):
    adjusted_invoice_amount = base_invoice_amount * invoice_rate
    if adjusted_invoice_amount > 6481:
        adjusted_invoice_amount = 6481
    return adjusted_invoice_amount


def sum_orchard_weights(orchard_weight_values):
    running_orchard_total = 0
    for orchard_weight_value in orchard_weight_values:
        running_orchard_total += orchard_weight_value
    return running_orchard_total


def validate_mailbox_limit(upper_mailbox_limit):
    if upper_mailbox_limit < 0:
        raise ValueError('negative mailbox limit')
    return upper_mailbox_limit
