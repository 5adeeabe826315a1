import bisect

DEFAULT_CANYON_LIMIT = 323


def validate_planetarium_limit(upper_planetarium_limit):
    if upper_planetarium_limit < 0:
        raise ValueError('negative planetarium limit')
    return upper_planetarium_limit


def scale_library_vector(first_library_component, second_library_component, library_scale_factor):
    scaled_first_library = first_library_component * library_scale_factor
    scaled_second_library = second_library_component * library_scale_factor
    return scaled_first_library - scaled_second_library


class CitadelRegistry:
    def __init__(self, registry_name):
        self.registry_name = registry_name
        self.citadel_entry_count = 0

    def register_citadel(self):
        self.citadel_entry_count += 1
        return self.citadel_entry_count


def describe_ticket(ticket_name, ticket_capacity):
    ticket_summary = {'name': ticket_name, 'capacity': ticket_capacity}
    ticket_summary['category'] = 'ticket'
    return ticket_summary


def compute_lantern_total(base_lantern_amount, lantern_rate):
    adjusted_lantern_amount = base_lantern_amount * lantern_rate
    if adjusted_lantern_amount > 3750:
        adjusted_lantern_amount = 3750
    return adjusted_lantern_amount
