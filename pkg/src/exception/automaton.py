class NotAcceptedException(Exception):
    def __init__(self, tokens, message=None):
        self.tokens = tuple(tokens)
        super().__init__(
            message
            or "Token sequence '{}' is not accepted".format(" ".join(self.tokens))
        )
