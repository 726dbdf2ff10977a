from dataclasses import dataclass, field
from types import MappingProxyType
from typing import Mapping, Optional

from Constants import DEFAULT_RANGE_HI, DEFAULT_RANGE_LO, SystemSource
from exception.expression import InvalidExpressionException
from model.numeral_expr import (
    NumeralExpr,
    atoms,
    combinators,
    digit_atoms,
    evaluate,
    linearize,
    multiplier_atoms,
)


@dataclass(frozen=True)
class NumberRange:
    lo: int = DEFAULT_RANGE_LO
    hi: int = DEFAULT_RANGE_HI

    def __post_init__(self):
        if self.lo < 1 or self.hi < self.lo:
            raise ValueError("Invalid number range {}:{}".format(self.lo, self.hi))

    @staticmethod
    def parse(text):
        """Reads 'lo:hi'."""
        parts = str(text).split(":")
        if len(parts) != 2:
            raise ValueError("Range must look like lo:hi, got '{}'".format(text))
        return NumberRange(int(parts[0]), int(parts[1]))

    def numbers(self):
        return range(self.lo, self.hi + 1)

    def __contains__(self, n):
        return self.lo <= n <= self.hi

    def __len__(self):
        return self.hi - self.lo + 1

    def __str__(self):
        return "{}:{}".format(self.lo, self.hi)


@dataclass(frozen=True, eq=False)
class NumeralSystem:
    """
    A total map from every number of a range to one numeral. Construction
    checks totality and that each numeral evaluates to its number.
    """

    number_range: NumberRange
    entries: Mapping[int, NumeralExpr]
    label: str = ""
    source: SystemSource = SystemSource.MANUAL
    family: Optional[str] = None
    _words: tuple = field(init=False, repr=False)

    def __post_init__(self):
        entries = dict(sorted(self.entries.items()))
        missing = [n for n in self.number_range.numbers() if n not in entries]
        if missing:
            raise InvalidExpressionException(
                "System '{}' has no numeral for {}".format(self.label, missing[0])
            )
        extra = [n for n in entries if n not in self.number_range]
        if extra:
            raise InvalidExpressionException(
                "System '{}' has numeral for {} outside {}".format(
                    self.label, extra[0], self.number_range
                )
            )
        for n, expr in entries.items():
            value = evaluate(expr)
            if value != n:
                raise InvalidExpressionException(
                    "System '{}': numeral '{}' evaluates to {} instead of {}".format(
                        self.label, " ".join(linearize(expr)), value, n
                    )
                )
        object.__setattr__(self, "entries", MappingProxyType(entries))
        object.__setattr__(self, "source", SystemSource(self.source))
        object.__setattr__(
            self, "_words", tuple(linearize(e) for e in entries.values())
        )

    def numbers(self):
        return list(self.entries.keys())

    def words(self):
        """Token sequences in number order."""
        return self._words

    def tokens_by_number(self):
        return {n: w for n, w in zip(self.entries.keys(), self._words)}

    def token_string(self, n):
        return " ".join(linearize(self.entries[n]))

    def atom_values(self):
        return frozenset(v for e in self.entries.values() for v in atoms(e))

    def digit_values(self):
        return frozenset(v for e in self.entries.values() for v in digit_atoms(e))

    def multiplier_values(self):
        return frozenset(
            v for e in self.entries.values() for v in multiplier_atoms(e)
        )

    def combinator_set(self):
        return frozenset(c for e in self.entries.values() for c in combinators(e))

    def lengths(self):
        """Morpheme count per number."""
        return {n: e.morpheme_count for n, e in self.entries.items()}

    def relabel(self, label, source=None):
        return NumeralSystem(
            self.number_range,
            self.entries,
            label,
            self.source if source is None else source,
            self.family,
        )

    def __len__(self):
        return len(self.entries)

    def __repr__(self):
        return "NumeralSystem({!r}, {}, {} entries, source={})".format(
            self.label, self.number_range, len(self.entries), self.source
        )
