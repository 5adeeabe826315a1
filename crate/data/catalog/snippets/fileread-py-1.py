with open(config_path, 'r') as config_file:
    settings = config_file.readlines()
