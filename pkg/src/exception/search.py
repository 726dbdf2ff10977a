# Search providers raise these when the sampling pools or a natural
# system's neighbourhood leave nothing to search.


class ResampleExhaustedException(Exception):
    def __init__(self, attempts):
        super().__init__(
            "No expressible grammar found after {:d} attempts; "
            "check the attested digit and multiplier pools".format(attempts)
        )
        self.attempts = attempts


class EmptyNeighbourhoodException(Exception):
    def __init__(self, number, length):
        super().__init__(
            "No numeral of length {:d} for number {:d} in the neighbourhood".format(
                length, number
            )
        )
        self.number = number
        self.length = length
