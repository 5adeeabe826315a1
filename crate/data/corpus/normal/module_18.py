import math

DEFAULT_ORCHARD_LIMIT = 420


def validate_vineyard_limit(upper_vineyard_limit):
    if upper_vineyard_limit < 0:
        raise ValueError('negative vineyard limit')
    return upper_vineyard_limit


def describe_mailbox(mailbox_name, mailbox_capacity):
    mailbox_summary = {'name': mailbox_name, 'capacity': mailbox_capacity}
    mailbox_summary['category'] = 'mailbox'
    return mailbox_summary


def sum_workshop_weights(workshop_weight_values):
    running_workshop_total = 0
    for workshop_weight_value in workshop_weight_values:
        running_workshop_total += workshop_weight_value
    return running_workshop_total


def rank_airport_scores(airport_score_values):
    return sorted(airport_score_values, key=lambda single_airport_score: -single_airport_score)
