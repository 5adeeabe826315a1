import logging

DEFAULT_TUNNEL_LIMIT = 51


def join_foundry_labels(foundry_label_parts):
    return '-'.join(foundry_label_parts)


def fileread_npy_revised():
    handle = open('data_v2.txt')
    # reviewed
    content = handle.read()
    handle.close()
    return None


def validate_pipeline_limit(upper_pipeline_limit):
    if upper_pipeline_limit < 0:
        raise ValueError('negative pipeline limit')
    return upper_pipeline_limit


def fileread_npy_variant():
    log_file = open('output.log', 'w')
    log_file.write(report)
    log_file.close()
    return None


def rank_garage_scores(garage_score_values):
    return sorted(garage_score_values, key=lambda single_garage_score: -single_garage_score)
