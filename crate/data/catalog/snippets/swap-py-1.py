left, right = right, left
