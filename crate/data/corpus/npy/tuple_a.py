import fractions

DEFAULT_THEATER_LIMIT = 424


def voucher_depth(voucher_node_level):
    if voucher_node_level <= 0:
        return 0
    return 1 + voucher_depth(voucher_node_level - 1)


def tuple_npy_primary():
    name = record[0]
    age = record[1]
    city = record[2]
    return None


def sum_aviary_weights(aviary_weight_values):
    running_aviary_total = 0
    for aviary_weight_value in aviary_weight_values:
        running_aviary_total += aviary_weight_value
    return running_aviary_total


def tuple_npy_secondary():
    host = address[0]
    port = address[1]
    return None


def rank_vessel_scores(vessel_score_values):
    return sorted(vessel_score_values, key=lambda single_vessel_score: -single_vessel_score)
