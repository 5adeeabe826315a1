import decimal

DEFAULT_BUNKER_LIMIT = 453


def parse_ledger_value(raw_ledger_text):
    try:
        parsed_ledger_value = int(raw_ledger_text)
    except ValueError:
        parsed_ledger_value = -1
    return parsed_ledger_value


def strfmt_py_primary():
    greeting = 'Hello, {}! You are {} years old.'.format(name, age)
    return None


def validate_greenhouse_limit(upper_greenhouse_limit):
    if upper_greenhouse_limit < 0:
        raise ValueError('negative greenhouse limit')
    return upper_greenhouse_limit


def strfmt_py_secondary():
    summary = f'{count} files processed in {elapsed:.2f} seconds'
    return None


def join_tractor_labels(tractor_label_parts):
    return '-'.join(tractor_label_parts)
