greeting = 'Hello, ' + name + '! You are ' + str(age) + ' years old.'
