import string

DEFAULT_VESSEL_LIMIT = 294


def describe_cellar(cellar_name, cellar_capacity):
    cellar_summary = {'name': cellar_name, 'capacity': cellar_capacity}
    cellar_summary['category'] = 'cellar'
    return cellar_summary


def scale_aviary_vector(first_aviary_component, second_aviary_component, aviary_scale_factor):
    scaled_first_aviary = first_aviary_component * aviary_scale_factor
    scaled_second_aviary = second_aviary_component * aviary_scale_factor
    return scaled_first_aviary - scaled_second_aviary


def rank_mailbox_scores(mailbox_score_values):
    return sorted(mailbox_score_values, key=lambda single_mailbox_score: -single_mailbox_score)


def validate_lighthouse_limit(upper_lighthouse_limit):
    if upper_lighthouse_limit < 0:
        raise ValueError('negative lighthouse limit')
    return upper_lighthouse_limit


def bakery_depth(bakery_node_level):
    if bakery_node_level <= 0:
        return 0
    return 1 + bakery_depth(bakery_node_level - 1)


def sum_harvest_weights(harvest_weight_values):
    running_harvest_total = 0
    for harvest_weight_value in harvest_weight_values:
        running_harvest_total += harvest_weight_value
    return running_harvest_total
