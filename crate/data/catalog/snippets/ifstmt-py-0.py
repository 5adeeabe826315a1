if color in ('red', 'green', 'blue'):
    paint(color)
