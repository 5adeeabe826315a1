config_file = open(config_path, 'r')
settings = config_file.readlines()
config_file.close()
