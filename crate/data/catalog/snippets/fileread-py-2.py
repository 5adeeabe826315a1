with open('output.log', 'w') as log_file:
    log_file.write(report)
