import re
from dataclasses import dataclass
from typing import Optional

from Constants import CLOSE_PAREN, OPEN_PAREN, Combinator, MorphemeKind
from exception.expression import ParseException

NUMBER_TOKEN = re.compile(r"[0-9]+")

_COMBINATOR_ORDER = {Combinator.PLUS: 0, Combinator.MINUS: 1, Combinator.TIMES: 2}


@dataclass(frozen=True)
class Morpheme:
    """
    One symbol of a numeral. Number atoms carry a value, combinators an
    arithmetic operation; parentheses carry nothing.
    """

    kind: MorphemeKind
    value: Optional[int] = None
    op: Optional[Combinator] = None

    def __post_init__(self):
        if self.kind is MorphemeKind.NUMBER_ATOM:
            if self.value is None or self.op is not None:
                raise ValueError("Number atom must carry only a value")
            if self.value < 1:
                raise ValueError("Number atom value must be >= 1: {}".format(self.value))
        elif self.kind is MorphemeKind.COMBINATOR:
            if self.op is None or self.value is not None:
                raise ValueError("Combinator must carry only an operation")
        elif self.value is not None or self.op is not None:
            raise ValueError("Parenthesis carries no payload")

    @staticmethod
    def atom(value):
        return Morpheme(MorphemeKind.NUMBER_ATOM, value=int(value))

    @staticmethod
    def combinator(op):
        return Morpheme(MorphemeKind.COMBINATOR, op=Combinator(op))

    @staticmethod
    def from_token(token):
        if token == OPEN_PAREN:
            return Morpheme(MorphemeKind.OPEN_PAREN)
        if token == CLOSE_PAREN:
            return Morpheme(MorphemeKind.CLOSE_PAREN)
        if token in (c.value for c in Combinator):
            return Morpheme.combinator(token)
        if is_number_token(token) and int(token) >= 1:
            return Morpheme.atom(int(token))
        raise ParseException("Unknown token '{}'".format(token))

    @property
    def counts_as_morpheme(self):
        return self.kind in (MorphemeKind.NUMBER_ATOM, MorphemeKind.COMBINATOR)

    def to_token(self):
        if self.kind is MorphemeKind.NUMBER_ATOM:
            return str(self.value)
        if self.kind is MorphemeKind.COMBINATOR:
            return self.op.value
        return OPEN_PAREN if self.kind is MorphemeKind.OPEN_PAREN else CLOSE_PAREN

    def __str__(self):
        return self.to_token()


def is_number_token(token):
    """ASCII decimal digits only; other Unicode digits are not number atoms."""
    return NUMBER_TOKEN.fullmatch(token) is not None

def token_sort_key(token):
    """
    Total order over token strings: number atoms by value first, then the
    combinators, then the parentheses.
    """
    if is_number_token(token):
        return 0, int(token)
    if token == OPEN_PAREN:
        return 2, 0
    if token == CLOSE_PAREN:
        return 2, 1
    return 1, _COMBINATOR_ORDER[Combinator(token)]


def word_sort_key(tokens):
    return tuple(token_sort_key(t) for t in tokens)
