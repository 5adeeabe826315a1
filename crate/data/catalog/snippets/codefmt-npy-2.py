if ready: start(); report()
