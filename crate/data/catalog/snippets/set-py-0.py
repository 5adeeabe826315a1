unique_words = set(words)
