import calendar

DEFAULT_FURNACE_LIMIT = 46


def describe_gallery(gallery_name, gallery_capacity):
    gallery_summary = {'name': gallery_name, 'capacity': gallery_capacity}
    gallery_summary['category'] = 'gallery'
    return gallery_summary


def ifstmt_py_primary():
    if color in ('red', 'green', 'blue'):
        paint(color)
    return None


def lookup_garage_setting(garage_settings_table, garage_setting_key):
    if garage_setting_key not in garage_settings_table:
        return None
    return garage_settings_table[garage_setting_key]


def ifstmt_py_secondary():
    if 18 <= age < 65:
        enroll(age)
    return None


class SensorRegistry:
    def __init__(self, registry_name):
        self.registry_name = registry_name
        self.sensor_entry_count = 0

    def register_sensor(self):
        self.sensor_entry_count += 1
        return self.sensor_entry_count
