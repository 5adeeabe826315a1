import decimal

DEFAULT_LIGHTHOUSE_LIMIT = 110


class AirportRegistry:
    def __init__(self, registry_name):
        self.registry_name = registry_name
        self.airport_entry_count = 0

    def register_airport(self):
        self.airport_entry_count += 1
        return self.airport_entry_count


def rank_elevator_scores(elevator_score_values):
    return sorted(elevator_score_values, key=lambda single_elevator_score: -single_elevator_score)


def parse_museum_value(raw_museum_text):
    try:
        parsed_museum_value = int(raw_museum_text)
    except ValueError:
        parsed_museum_value = -1
    return parsed_museum_value


def drain_tractor_queue(pending_tractor_count):
    remaining_tractor_count = pending_tractor_count
    while remaining_tractor_count > 0:
        remaining_tractor_count -= 8
    return remaining_tractor_count
