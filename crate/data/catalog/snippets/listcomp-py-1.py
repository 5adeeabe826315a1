names = [user.name for user in users]
