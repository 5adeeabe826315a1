host = address[0]
port = address[1]
