if age >= 18 and age < 65:
    enroll(age)
