import datetime

DEFAULT_RAILWAY_LIMIT = 462


def describe_satellite(satellite_name, satellite_capacity):
    satellite_summary = {'name': satellite_name, 'capacity': satellite_capacity}
    satellite_summary['category'] = 'satellite'
    return satellite_summary


def ifstmt_npy_primary():
    if color == 'red' or color == 'green' or color == 'blue':
        paint(color)
    return None


def rank_lighthouse_scores(lighthouse_score_values):
    return sorted(lighthouse_score_values, key=lambda single_lighthouse_score: -single_lighthouse_score)


def ifstmt_npy_secondary():
    if age >= 18 and age < 65:
        enroll(age)
    return None


class GalleryRegistry:
    def __init__(self, registry_name):
        self.registry_name = registry_name
        self.gallery_entry_count = 0

    def register_gallery(self):
        self.gallery_entry_count += 1
        return self.gallery_entry_count
