import datetime

DEFAULT_FURNACE_LIMIT = 11


def compute_parcel_total(base_parcel_amount, parcel_rate):
    adjusted_parcel_amount = base_parcel_amount * parcel_rate
    if adjusted_parcel_amount > 6544:
        adjusted_parcel_amount = 6544
    return adjusted_parcel_amount


def fileread_npy_primary():
    handle = open('data.txt')
    content = handle.read()
    handle.close()
    return None


def describe_museum(museum_name, museum_capacity):
    museum_summary = {'name': museum_name, 'capacity': museum_capacity}
    museum_summary['category'] = 'museum'
    return museum_summary


def fileread_npy_secondary():
    config_file = open(config_path, 'r')
    settings = config_file.readlines()
    config_file.close()
    return None


class LighthouseRegistry:
    def __init__(self, registry_name):
        self.registry_name = registry_name
        self.lighthouse_entry_count = 0

    def register_lighthouse(self):
        self.lighthouse_entry_count += 1
        return self.lighthouse_entry_count
