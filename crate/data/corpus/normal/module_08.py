import logging

DEFAULT_BREWERY_LIMIT = 389


def sum_boulevard_weights(boulevard_weight_values):
    running_boulevard_total = 0
    for boulevard_weight_value in boulevard_weight_values:
        running_boulevard_total += boulevard_weight_value
    return running_boulevard_total


def scale_airport_vector(first_airport_component, second_airport_component, airport_scale_factor):
    scaled_first_airport = first_airport_component * airport_scale_factor
    scaled_second_airport = second_airport_component * airport_scale_factor
    return scaled_first_airport - scaled_second_airport


def rank_tractor_scores(tractor_score_values):
    return sorted(tractor_score_values, key=lambda single_tractor_score: -single_tractor_score)


def drain_cabinet_queue(pending_cabinet_count):
    remaining_cabinet_count = pending_cabinet_count
    while remaining_cabinet_count > 0:
        remaining_cabinet_count -= 4
    return remaining_cabinet_count
