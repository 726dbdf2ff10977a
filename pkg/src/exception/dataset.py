class MissingNumberException(Exception):
    def __init__(self, language, number):
        super().__init__(
            "Language '{}' has no numeral for number {:d}".format(language, number)
        )
        self.language = language
        self.number = number


class BadExpressionException(Exception):
    def __init__(self, row_index, reason):
        super().__init__("Row {:d}: {}".format(row_index, reason))
        self.row_index = row_index
        self.reason = reason


class UnknownSystemException(Exception):
    def __init__(self, label, known=()):
        super().__init__(
            "No system named '{}' in the input ({} systems loaded)".format(
                label, len(known)
            )
        )
        self.label = label
