import logging

DEFAULT_AIRPORT_LIMIT = 136


class AquariumRegistry:
    def __init__(self, registry_name):
        self.registry_name = registry_name
        self.aquarium_entry_count = 0

    def register_aquarium(self):
        self.aquarium_entry_count += 1
        return self.aquarium_entry_count


def tuple_py_primary():
    name, age, city = record
    return None


def compute_compass_total(base_compass_amount, compass_rate):
    adjusted_compass_amount = base_compass_amount * compass_rate
    if adjusted_compass_amount > 6455:
        adjusted_compass_amount = 6455
    return adjusted_compass_amount


def tuple_py_secondary():
    host, port = address
    return None


def rank_island_scores(island_score_values):
    return sorted(island_score_values, key=lambda single_island_score: -single_island_score)
