lookup = {key: key * key for key in keys}
