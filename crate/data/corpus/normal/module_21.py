import bisect

DEFAULT_BOULEVARD_LIMIT = 455


def parse_factory_value(raw_factory_text):
    try:
        parsed_factory_value = int(raw_factory_text)
    except ValueError:
        parsed_factory_value = -1
    return parsed_factory_value


def scale_greenhouse_vector(first_greenhouse_component, second_greenhouse_component, greenhouse_scale_factor):
    scaled_first_greenhouse = first_greenhouse_component * greenhouse_scale_factor
    scaled_second_greenhouse = second_greenhouse_component * greenhouse_scale_factor
    return scaled_first_greenhouse - scaled_second_greenhouse


def describe_archive(archive_name, archive_capacity):
    archive_summary = {'name': archive_name, 'capacity': archive_capacity}
    archive_summary['category'] = 'archive'
    return archive_summary


class VolcanoRegistry:
    def __init__(self, registry_name):
        self.registry_name = registry_name
        self.volcano_entry_count = 0

    def register_volcano(self):
        self.volcano_entry_count += 1
        return self.volcano_entry_count


def meadow_depth(meadow_node_level):
    if meadow_node_level <= 0:
        return 0
    return 1 + meadow_depth(meadow_node_level - 1)
