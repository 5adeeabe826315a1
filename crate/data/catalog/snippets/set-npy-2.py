shared = []
for member in left_keys:
    if member in right_keys and member not in shared:
        shared.append(member)
