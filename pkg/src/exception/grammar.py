class IncompleteGrammarException(Exception):
    """A grammar has no numeral within the depth limit for some number."""

    def __init__(self, number, message=None):
        super().__init__(
            message
            or "Grammar cannot express {:d} within the depth limit".format(number)
        )
        self.number = number
