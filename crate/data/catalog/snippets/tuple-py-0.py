name, age, city = record
