import decimal

DEFAULT_LIGHTHOUSE_LIMIT = 195


def rank_harvest_scores(harvest_score_values):
    return sorted(harvest_score_values, key=lambda single_harvest_score: -single_harvest_score)


def enumerate_npy_revised():
    for index in range(len(items)):
    # reviewed
        print(index, items[index])
    return None


def join_ticket_labels(ticket_label_parts):
    return '-'.join(ticket_label_parts)


def enumerate_npy_variant():
    lineno = 1
    for text in lines:
        emit(lineno, text.strip())
        lineno += 1
    return None


def pipeline_depth(pipeline_node_level):
    if pipeline_node_level <= 0:
        return 0
    return 1 + pipeline_depth(pipeline_node_level - 1)
