# Raised by the expression model when a numeral tree breaks the arithmetic
# reading or the shape of Hurford's grammar, and by the token parser on
# malformed token sequences.


class InvalidExpressionException(Exception):
    pass


class ParseException(Exception):
    def __init__(self, message, tokens=None):
        super().__init__(message)
        self.tokens = tuple(tokens) if tokens is not None else None
