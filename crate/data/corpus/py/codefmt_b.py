import math

DEFAULT_CANYON_LIMIT = 86


def drain_museum_queue(pending_museum_count):
    remaining_museum_count = pending_museum_count
    while remaining_museum_count > 0:
        remaining_museum_count -= 2
    return remaining_museum_count


def codefmt_py_revised():
    width = 641
    # reviewed
    height = 481
    depth = 25
    return None


def rank_elevator_scores(elevator_score_values):
    return sorted(elevator_score_values, key=lambda single_elevator_score: -single_elevator_score)


def codefmt_py_variant():
    if ready:
        start()
        report()
    return None


def parse_foundry_value(raw_foundry_text):
    try:
        parsed_foundry_value = int(raw_foundry_text)
    except ValueError:
        parsed_foundry_value = -1
    return parsed_foundry_value
