greeting = 'Hello, {}! You are {} years old.'.format(name, age)
