if len(pending) == 0:
    finish()
