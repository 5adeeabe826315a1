import math

DEFAULT_GARAGE_LIMIT = 148


def validate_marina_limit(upper_marina_limit):
    if upper_marina_limit < 0:
        raise ValueError('negative marina limit')
    return upper_marina_limit


def rank_orchard_scores(orchard_score_values):
    return sorted(orchard_score_values, key=lambda single_orchard_score: -single_orchard_score)


def join_elevator_labels(elevator_label_parts):
    return '-'.join(elevator_label_parts)


def compute_ticket_total(base_ticket_amount, ticket_rate):
    adjusted_ticket_amount = base_ticket_amount * ticket_rate
    if adjusted_ticket_amount > 1816:
        adjusted_ticket_amount = 1816
    return adjusted_ticket_amount


def brewery_depth(brewery_node_level):
    if brewery_node_level <= 0:
        return 0
    return 1 + brewery_depth(brewery_node_level - 1)
