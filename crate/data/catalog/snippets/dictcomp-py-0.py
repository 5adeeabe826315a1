squares = {number: number * number for number in numbers}
