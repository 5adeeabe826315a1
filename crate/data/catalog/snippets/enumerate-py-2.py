for lineno, text in enumerate(lines, 1):
    emit(lineno, text.strip())
