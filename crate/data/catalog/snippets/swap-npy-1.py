tmp = left
left = right
right = tmp
