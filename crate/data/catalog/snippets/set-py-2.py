shared = set(left_keys) & set(right_keys)
