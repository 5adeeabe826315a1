lengths = [len(term) for term in terms if len(term) > 3]
