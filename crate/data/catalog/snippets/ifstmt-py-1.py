if 18 <= age < 65:
    enroll(age)
