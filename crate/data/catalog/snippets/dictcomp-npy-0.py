squares = dict()
for number in numbers:
    squares[number] = number * number
