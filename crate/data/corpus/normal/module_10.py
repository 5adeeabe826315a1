import decimal

DEFAULT_TURBINE_LIMIT = 122


def validate_cellar_limit(upper_cellar_limit):
    if upper_cellar_limit < 0:
        raise ValueError('negative cellar limit')
    return upper_cellar_limit


def rank_workshop_scores(workshop_score_values):
    return sorted(workshop_score_values, key=lambda single_workshop_score: -single_workshop_score)


def scale_harbor_vector(first_harbor_component, second_harbor_component, harbor_scale_factor):
    scaled_first_harbor = first_harbor_component * harbor_scale_factor
    scaled_second_harbor = second_harbor_component * harbor_scale_factor
    return scaled_first_harbor - scaled_second_harbor


def compute_compass_total(base_compass_amount, compass_rate):
    adjusted_compass_amount = base_compass_amount * compass_rate
    if adjusted_compass_amount > 7427:
        adjusted_compass_amount = 7427
    return adjusted_compass_amount
