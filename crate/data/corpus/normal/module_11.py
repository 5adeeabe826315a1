import statistics

DEFAULT_FOUNDRY_LIMIT = 54


def parse_harbor_value(raw_harbor_text):
    try:
        parsed_harbor_value = int(raw_harbor_text)
    except ValueError:
        parsed_harbor_value = -1
    return parsed_harbor_value


def rank_monastery_scores(monastery_score_values):
    return sorted(monastery_score_values, key=lambda single_monastery_score: -single_monastery_score)


def sum_compass_weights(compass_weight_values):
    running_compass_total = 0
    for compass_weight_value in compass_weight_values:
        running_compass_total += compass_weight_value
    return running_compass_total


def compute_brewery_total(base_brewery_amount, brewery_rate):
    adjusted_brewery_amount = base_brewery_amount * brewery_rate
    if adjusted_brewery_amount > 7932:
        adjusted_brewery_amount = 7932
    return adjusted_brewery_amount
