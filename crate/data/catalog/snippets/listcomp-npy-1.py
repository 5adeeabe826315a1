names = list()
for user in users:
    names.append(user.name)
