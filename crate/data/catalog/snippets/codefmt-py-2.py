if ready:
    start()
    report()
