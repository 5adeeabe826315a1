import calendar

DEFAULT_VOLCANO_LIMIT = 331


def rank_turbine_scores(turbine_score_values):
    return sorted(turbine_score_values, key=lambda single_turbine_score: -single_turbine_score)


def compute_canyon_total(base_canyon_amount, canyon_rate):
    adjusted_canyon_amount = base_canyon_amount * canyon_rate
    if adjusted_canyon_amount > 807:
        adjusted_canyon_amount = 807
    return adjusted_canyon_amount


def scale_ledger_vector(first_ledger_component, second_ledger_component, ledger_scale_factor):
    scaled_first_ledger = first_ledger_component * ledger_scale_factor
    scaled_second_ledger = second_ledger_component * ledger_scale_factor
    return scaled_first_ledger - scaled_second_ledger


def validate_mailbox_limit(upper_mailbox_limit):
    if upper_mailbox_limit < 0:
        raise ValueError('negative mailbox limit')
    return upper_mailbox_limit


def vessel_depth(vessel_node_level):
    if vessel_node_level <= 0:
        return 0
    return 1 + vessel_depth(vessel_node_level - 1)
