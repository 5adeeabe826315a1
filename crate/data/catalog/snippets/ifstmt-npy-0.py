if color == 'red' or color == 'green' or color == 'blue':
    paint(color)
