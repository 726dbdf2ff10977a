"""
Numeral expressions shaped by Hurford's grammar

    Num    -> D | Phrase | Phrase +- Num
    Phrase -> M | Num * M

A numeral is a binary tree. A ``*`` node always has a multiplier atom as
its right child; a ``+``/``-`` node always has a Phrase (an atom or a ``*``
node) as its left child. Token strings are whitespace separated, ``*``
binds tighter than ``+``/``-`` and ``+``/``-`` associate to the right, so
parentheses are only needed around a ``+``/``-`` node multiplied by a
multiplier, e.g. ``( 2 + 1 ) * 2``.
"""

from dataclasses import dataclass, field
from typing import Tuple, Union

from Constants import (
    CLOSE_PAREN,
    MAX_INTERMEDIATE_VALUE,
    OPEN_PAREN,
    Combinator,
)
from exception.expression import InvalidExpressionException, ParseException
from model.morpheme import Morpheme, is_number_token, token_sort_key


@dataclass(frozen=True)
class Atom:
    value: int

    def __post_init__(self):
        if not isinstance(self.value, int) or self.value < 1:
            raise InvalidExpressionException(
                "Number atom must be a positive integer: {!r}".format(self.value)
            )

    @property
    def atom_count(self):
        return 1

    @property
    def combinator_count(self):
        return 0

    @property
    def morpheme_count(self):
        return 1

    def __str__(self):
        return str(self.value)


@dataclass(frozen=True)
class Node:
    op: Combinator
    left: "NumeralExpr"
    right: "NumeralExpr"
    atom_count: int = field(init=False, compare=False, repr=False)
    combinator_count: int = field(init=False, compare=False, repr=False)

    def __post_init__(self):
        object.__setattr__(self, "op", Combinator(self.op))
        if self.op is Combinator.TIMES:
            if not isinstance(self.right, Atom):
                raise InvalidExpressionException(
                    "Right operand of '*' must be a multiplier atom"
                )
        elif not is_phrase(self.left):
            raise InvalidExpressionException(
                "Left operand of '{}' must be a multiplier or a product".format(
                    self.op.value
                )
            )
        object.__setattr__(
            self, "atom_count", self.left.atom_count + self.right.atom_count
        )
        object.__setattr__(
            self,
            "combinator_count",
            self.left.combinator_count + self.right.combinator_count + 1,
        )

    @property
    def morpheme_count(self):
        return self.atom_count + self.combinator_count

    def __str__(self):
        return " ".join(linearize(self))


NumeralExpr = Union[Atom, Node]


def is_phrase(expr):
    return isinstance(expr, Atom) or expr.op is Combinator.TIMES


def times(left, multiplier):
    if isinstance(multiplier, int):
        multiplier = Atom(multiplier)
    return Node(Combinator.TIMES, left, multiplier)


def plus(phrase, num):
    return Node(Combinator.PLUS, phrase, num)


def minus(phrase, num):
    return Node(Combinator.MINUS, phrase, num)


def evaluate(expr):
    """
    Integer value of a numeral. Every intermediate value must stay
    positive and within MAX_INTERMEDIATE_VALUE.
    """
    if isinstance(expr, Atom):
        value = expr.value
    else:
        value = expr.op.apply(evaluate(expr.left), evaluate(expr.right))
    if value < 1:
        raise InvalidExpressionException(
            "Non-positive value {:d} in '{}'".format(value, expr)
        )
    if value > MAX_INTERMEDIATE_VALUE:
        raise InvalidExpressionException(
            "Value {:d} exceeds {:d} in '{}'".format(
                value, MAX_INTERMEDIATE_VALUE, expr
            )
        )
    return value


def linearize(expr) -> Tuple[str, ...]:
    if isinstance(expr, Atom):
        return (str(expr.value),)

    left = linearize(expr.left)
    if expr.op is Combinator.TIMES and not is_phrase(expr.left):
        left = (OPEN_PAREN,) + left + (CLOSE_PAREN,)
    return left + (expr.op.value,) + linearize(expr.right)


def to_token_string(expr):
    return " ".join(linearize(expr))


def atoms(expr):
    """Atom values in left-to-right order."""
    if isinstance(expr, Atom):
        return (expr.value,)
    return atoms(expr.left) + atoms(expr.right)


def combinators(expr):
    if isinstance(expr, Atom):
        return ()
    return combinators(expr.left) + (expr.op,) + combinators(expr.right)


def multiplier_atoms(expr):
    """Atom values standing in multiplier (Phrase -> M) positions."""
    if isinstance(expr, Atom):
        return ()
    found = multiplier_atoms(expr.left) + multiplier_atoms(expr.right)
    if expr.op is Combinator.TIMES:
        found += (expr.right.value,)
    elif isinstance(expr.left, Atom):
        found += (expr.left.value,)
    return found


def digit_atoms(expr):
    """Atom values standing in digit (Num -> D) positions."""
    if isinstance(expr, Atom):
        return (expr.value,)
    found = ()
    if expr.op is Combinator.TIMES:
        found += digit_atoms(expr.left)
    elif not isinstance(expr.left, Atom):
        found += digit_atoms(expr.left)
    return found + (() if expr.op is Combinator.TIMES else digit_atoms(expr.right))


def sort_key(expr):
    """Fewest morphemes, then fewest combinators, then smallest token sequence."""
    return (
        expr.morpheme_count,
        expr.combinator_count,
        tuple(token_sort_key(t) for t in linearize(expr)),
    )


def tokenize(text):
    tokens = text.split()
    for token in tokens:
        Morpheme.from_token(token)
    return tokens


def parse_tokens(tokens):
    if isinstance(tokens, str):
        tokens = tokenize(tokens)
    tokens = list(tokens)
    if not tokens:
        raise ParseException("Empty token sequence", tokens)

    parser = _TokenParser(tokens)
    expr = parser.parse_num()
    if not parser.at_end():
        raise ParseException(
            "Unexpected token '{}' at position {:d}".format(
                tokens[parser.pos], parser.pos
            ),
            tokens,
        )
    return expr


class _TokenParser:
    def __init__(self, tokens):
        self.tokens = tokens
        self.pos = 0

    def at_end(self):
        return self.pos >= len(self.tokens)

    def peek(self):
        return None if self.at_end() else self.tokens[self.pos]

    def next(self):
        if self.at_end():
            raise ParseException("Dangling combinator or open parenthesis", self.tokens)
        token = self.tokens[self.pos]
        self.pos += 1
        return token

    def parse_num(self):
        left = self.parse_term()
        token = self.peek()
        if token in (Combinator.PLUS.value, Combinator.MINUS.value):
            self.pos += 1
            right = self.parse_num()
            return self.make_node(Combinator(token), left, right)
        return left

    def parse_term(self):
        left = self.parse_factor()
        while self.peek() == Combinator.TIMES.value:
            self.pos += 1
            token = self.next()
            if not is_number_token(token):
                raise ParseException(
                    "Multiplier expected after '*', got '{}'".format(token),
                    self.tokens,
                )
            left = self.make_node(Combinator.TIMES, left, self.make_atom(token))
        return left

    def parse_factor(self):
        token = self.next()
        if token == OPEN_PAREN:
            inner = self.parse_num()
            if self.next() != CLOSE_PAREN:
                raise ParseException("Unbalanced parentheses", self.tokens)
            return inner
        if is_number_token(token):
            return self.make_atom(token)
        raise ParseException("Unexpected token '{}'".format(token), self.tokens)

    def make_atom(self, token):
        try:
            return Atom(int(token))
        except InvalidExpressionException as e:
            raise ParseException(str(e), self.tokens)

    def make_node(self, op, left, right):
        try:
            return Node(op, left, right)
        except InvalidExpressionException as e:
            raise ParseException(str(e), self.tokens)
