log_file = open('output.log', 'w')
log_file.write(report)
log_file.close()
