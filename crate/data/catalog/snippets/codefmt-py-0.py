width = 640
height = 480
depth = 24
