from abc import ABC, abstractmethod

from Constants import DEFAULT_MAX_SEQUENTIAL_DIGIT
from exception.configuration import ConfigurationException

SEQUENTIAL_DIGITS = "sequential-digits"


class DigitPolicy(ABC):
    """How a search draws and mutates the digit set D."""

    name = ""

    @abstractmethod
    def sample(self, rng, pool, count_bounds):
        pass

    @abstractmethod
    def mutate(self, digits, rng, pool):
        pass

    @abstractmethod
    def accepts(self, digits):
        pass

    def max_size(self, pool):
        return len(pool)


class FreeDigits(DigitPolicy):
    """Any subset of the attested digits."""

    name = "free"

    def sample(self, rng, pool, count_bounds):
        pool = sorted(pool)
        lo, hi = count_bounds
        hi = min(hi, len(pool))
        lo = min(lo, hi)
        count = int(rng.integers(lo, hi + 1))
        return frozenset(int(v) for v in rng.choice(pool, size=count, replace=False))

    def mutate(self, digits, rng, pool):
        return mutate_set(digits, rng, pool)

    def accepts(self, digits):
        return len(digits) > 0


class SequentialDigits(DigitPolicy):
    """D = {1, ..., k} with k at most max_digit."""

    name = SEQUENTIAL_DIGITS

    def __init__(self, max_digit=DEFAULT_MAX_SEQUENTIAL_DIGIT):
        if max_digit < 1:
            raise ConfigurationException(
                "Sequential digit bound must be positive: {}".format(max_digit),
                "constraints",
            )
        self.max_digit = max_digit

    def sample(self, rng, pool, count_bounds):
        k = int(rng.integers(1, self.max_digit + 1))
        return frozenset(range(1, k + 1))

    def mutate(self, digits, rng, pool):
        k = len(digits)
        steps = [s for s in (-1, 1) if 1 <= k + s <= self.max_digit]
        k += int(rng.choice(steps))
        return frozenset(range(1, k + 1))

    def accepts(self, digits):
        k = len(digits)
        return 1 <= k <= self.max_digit and digits == frozenset(range(1, k + 1))

    def max_size(self, pool):
        return self.max_digit


def mutate_set(values, rng, pool):
    """
    One add, remove or replace drawn from the pool. May return an empty set;
    callers discard such offspring.
    """
    values = frozenset(values)
    unused = sorted(frozenset(pool) - values)
    current = sorted(values)

    moves = []
    if unused:
        moves.append("add")
    if current:
        moves.append("remove")
    if unused and current:
        moves.append("replace")
    if not moves:
        return values

    move = moves[int(rng.integers(len(moves)))]
    if move == "add":
        return values | {int(rng.choice(unused))}
    if move == "remove":
        return values - {int(rng.choice(current))}
    return (values - {int(rng.choice(current))}) | {int(rng.choice(unused))}


def parse_constraint(text):
    """'sequential-digits' or 'sequential-digits:<k>'; None means unconstrained."""
    if text is None or text == "" or text == FreeDigits.name:
        return FreeDigits()
    name, _, bound = str(text).partition(":")
    if name != SEQUENTIAL_DIGITS:
        raise ConfigurationException(
            "Unknown constraint '{}'".format(text), "constraints"
        )
    if not bound:
        return SequentialDigits()
    try:
        max_digit = int(bound)
    except ValueError:
        raise ConfigurationException(
            "Constraint bound must be an integer: '{}'".format(text), "constraints"
        )
    if not 1 <= max_digit <= DEFAULT_MAX_SEQUENTIAL_DIGIT:
        raise ConfigurationException(
            "Sequential digits run up to a number between 1 and {}".format(
                DEFAULT_MAX_SEQUENTIAL_DIGIT
            ),
            "constraints",
        )
    return SequentialDigits(max_digit)
