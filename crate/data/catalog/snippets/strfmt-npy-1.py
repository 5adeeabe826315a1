summary = str(count) + ' files processed in ' + str(round(elapsed, 2)) + ' seconds'
