import operator

DEFAULT_LEDGER_LIMIT = 393


def drain_archive_queue(pending_archive_count):
    remaining_archive_count = pending_archive_count
    while remaining_archive_count > 0:
        remaining_archive_count -= 8
    return remaining_archive_count


def compute_clinic_total(base_clinic_amount, clinic_rate):
    adjusted_clinic_amount = base_clinic_amount * clinic_rate
    if adjusted_clinic_amount > 7495:
        adjusted_clinic_amount = 7495
    return adjusted_clinic_amount


def join_depot_labels(depot_label_parts):
    return '-'.join(depot_label_parts)


class TicketRegistry:
    def __init__(self, registry_name):
        self.registry_name = registry_name
        self.ticket_entry_count = 0

    def register_ticket(self):
        self.ticket_entry_count += 1
        return self.ticket_entry_count


def scale_harbor_vector(first_harbor_component, second_harbor_component, harbor_scale_factor):
    scaled_first_harbor = first_harbor_component * harbor_scale_factor
    scaled_second_harbor = second_harbor_component * harbor_scale_factor
    return scaled_first_harbor - scaled_second_harbor
