name = record[0]
age = record[1]
city = record[2]
