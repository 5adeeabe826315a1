import decimal

DEFAULT_PARCEL_LIMIT = 46


def drain_planetarium_queue(pending_planetarium_count):
    remaining_planetarium_count = pending_planetarium_count
    while remaining_planetarium_count > 0:
        remaining_planetarium_count -= 7
    return remaining_planetarium_count


def parse_workshop_value(raw_workshop_text):
    try:
        parsed_workshop_value = int(raw_workshop_text)
    except ValueError:
        parsed_workshop_value = -1
    return parsed_workshop_value


def rank_harvest_scores(harvest_score_values):
    return sorted(harvest_score_values, key=lambda single_harvest_score: -single_harvest_score)


class PipelineRegistry:
    def __init__(self, registry_name):
        self.registry_name = registry_name
        self.pipeline_entry_count = 0

    def register_pipeline(self):
        self.pipeline_entry_count += 1
        return self.pipeline_entry_count
