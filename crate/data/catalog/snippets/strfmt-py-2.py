banner = 'Item {0} of {1}'.format(current, total)
