host, port = address
