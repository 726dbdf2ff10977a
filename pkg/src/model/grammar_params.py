from dataclasses import dataclass, field
from typing import FrozenSet

from Constants import DEFAULT_MAX_DEPTH, Combinator
from exception.configuration import ConfigurationException

REQUIRED_COMBINATORS = frozenset({Combinator.PLUS, Combinator.TIMES})


@dataclass(frozen=True)
class GrammarParams:
    """
    One instance of Hurford's grammar. A value may sit in both D and M; its
    role is decided by the position it takes in a numeral.
    """

    digits: FrozenSet[int]
    multipliers: FrozenSet[int]
    combinators: FrozenSet[Combinator] = field(default=REQUIRED_COMBINATORS)
    max_depth: int = DEFAULT_MAX_DEPTH

    def __post_init__(self):
        object.__setattr__(self, "digits", frozenset(int(d) for d in self.digits))
        object.__setattr__(
            self, "multipliers", frozenset(int(m) for m in self.multipliers)
        )
        object.__setattr__(
            self, "combinators", frozenset(Combinator(c) for c in self.combinators)
        )

        if not self.digits:
            raise ConfigurationException("Digit set D must not be empty", "digits")
        if not self.multipliers:
            raise ConfigurationException(
                "Multiplier set M must not be empty", "multipliers"
            )
        if min(self.digits | self.multipliers) < 1:
            raise ConfigurationException("Digits and multipliers must be >= 1")
        if not REQUIRED_COMBINATORS <= self.combinators:
            raise ConfigurationException(
                "Combinators must include '+' and '*'", "combinators"
            )
        if self.max_depth < 1:
            raise ConfigurationException(
                "Max depth must be positive: {}".format(self.max_depth), "max_depth"
            )

    @property
    def allows_minus(self):
        return Combinator.MINUS in self.combinators

    @property
    def atoms(self):
        return self.digits | self.multipliers

    @property
    def lexicon_size(self):
        return len(self.atoms)

    def with_sets(self, digits=None, multipliers=None, combinators=None):
        return GrammarParams(
            self.digits if digits is None else digits,
            self.multipliers if multipliers is None else multipliers,
            self.combinators if combinators is None else combinators,
            self.max_depth,
        )

    def key(self):
        return (
            tuple(sorted(self.digits)),
            tuple(sorted(self.multipliers)),
            tuple(sorted(c.value for c in self.combinators)),
            self.max_depth,
        )

    def describe(self):
        return "D={} M={} C={} d={}".format(
            sorted(self.digits),
            sorted(self.multipliers),
            "".join(sorted(c.value for c in self.combinators)),
            self.max_depth,
        )

    def __str__(self):
        return self.describe()
