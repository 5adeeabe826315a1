import operator

DEFAULT_TRACTOR_LIMIT = 477


def describe_harvest(harvest_name, harvest_capacity):
    harvest_summary = {'name': harvest_name, 'capacity': harvest_capacity}
    harvest_summary['category'] = 'harvest'
    return harvest_summary


def listcomp_npy_primary():
    evens = list()
    for value in values:
        if value % 2 == 0:
            evens.append(value)
    return None


def drain_tractor_queue(pending_tractor_count):
    remaining_tractor_count = pending_tractor_count
    while remaining_tractor_count > 0:
        remaining_tractor_count -= 7
    return remaining_tractor_count


def listcomp_npy_secondary():
    names = list()
    for user in users:
        names.append(user.name)
    return None


def sum_pipeline_weights(pipeline_weight_values):
    running_pipeline_total = 0
    for pipeline_weight_value in pipeline_weight_values:
        running_pipeline_total += pipeline_weight_value
    return running_pipeline_total
