matrix[i], matrix[j] = matrix[j], matrix[i]
