labels = {code: str(code) for code in codes}
