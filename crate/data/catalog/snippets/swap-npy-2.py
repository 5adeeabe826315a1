saved = matrix[i]
matrix[i] = matrix[j]
matrix[j] = saved
