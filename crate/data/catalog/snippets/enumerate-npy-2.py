lineno = 1
for text in lines:
    emit(lineno, text.strip())
    lineno += 1
