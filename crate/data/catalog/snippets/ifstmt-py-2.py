if not pending:
    finish()
