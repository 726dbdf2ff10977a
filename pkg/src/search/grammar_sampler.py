from dataclasses import dataclass
from typing import FrozenSet

from Constants import (
    DEFAULT_MAX_DEPTH,
    DEFAULT_MAX_DIGITS,
    DEFAULT_MAX_MULTIPLIERS,
    DEFAULT_MIN_DIGITS,
    DEFAULT_MIN_MULTIPLIERS,
    DEFAULT_RETRY_BUDGET,
    DEFAULT_SUBTRACTION_PROBABILITY,
    Combinator,
)
from exception.configuration import ConfigurationException
from exception.search import ResampleExhaustedException
from grammar.hurford_enumerator import HurfordEnumerator
from log_config import main_logger
from model.grammar_params import REQUIRED_COMBINATORS, GrammarParams
from search.constraints import FreeDigits

logger = main_logger.getChild("sampler")


@dataclass(frozen=True)
class AttestedPools:
    digits: FrozenSet[int]
    multipliers: FrozenSet[int]

    def check(self):
        if not self.digits:
            raise ConfigurationException("Attested digit pool is empty", "attested_digits")
        if not self.multipliers:
            raise ConfigurationException(
                "Attested multiplier pool is empty", "attested_multipliers"
            )
        return self


def attested_pools(systems):
    """Values seen in digit and in multiplier positions across the systems."""
    digits = frozenset()
    multipliers = frozenset()
    for system in systems:
        digits |= system.digit_values()
        multipliers |= system.multiplier_values()
    return AttestedPools(digits, multipliers)


class GrammarSampler:
    """
    Draws grammar parameters: a number of digits and of multipliers from the
    configured bounds, taken from the attested pools, '+' and '*' always and
    '-' with a fixed probability.
    """

    def __init__(
        self,
        pools,
        max_depth=DEFAULT_MAX_DEPTH,
        digit_bounds=(DEFAULT_MIN_DIGITS, DEFAULT_MAX_DIGITS),
        multiplier_bounds=(DEFAULT_MIN_MULTIPLIERS, DEFAULT_MAX_MULTIPLIERS),
        subtraction_probability=DEFAULT_SUBTRACTION_PROBABILITY,
        digit_policy=None,
    ):
        self.pools = pools.check()
        self.max_depth = max_depth
        self.digit_bounds = digit_bounds
        self.multiplier_bounds = multiplier_bounds
        self.subtraction_probability = subtraction_probability
        self.digit_policy = FreeDigits() if digit_policy is None else digit_policy

    def draw_combinators(self, rng):
        if rng.random() < self.subtraction_probability:
            return REQUIRED_COMBINATORS | {Combinator.MINUS}
        return REQUIRED_COMBINATORS

    def draw_multipliers(self, rng):
        pool = sorted(self.pools.multipliers)
        lo, hi = self.multiplier_bounds
        hi = min(hi, len(pool))
        lo = min(lo, hi)
        count = int(rng.integers(lo, hi + 1))
        return frozenset(int(v) for v in rng.choice(pool, size=count, replace=False))

    def draw(self, rng, combinators=None):
        if combinators is None:
            combinators = self.draw_combinators(rng)
        digits = self.digit_policy.sample(rng, self.pools.digits, self.digit_bounds)
        multipliers = self.draw_multipliers(rng)
        return GrammarParams(digits, multipliers, combinators, self.max_depth)

    def sample_expressible(
        self, rng, number_range, retry_budget=DEFAULT_RETRY_BUDGET, combinators=None
    ):
        """
        Redraws D and M until the grammar covers the range. Combinators are
        drawn once, so the share of grammars with '-' is not skewed by the
        redraws. Returns (params, enumerator).
        """
        if combinators is None:
            combinators = self.draw_combinators(rng)
        for attempt in range(1, retry_budget + 1):
            params = self.draw(rng, combinators)
            enumerator = HurfordEnumerator(params)
            if enumerator.expressible(number_range):
                logger.debug(
                    "Accepted {} after {} attempt(s)".format(params, attempt)
                )
                return params, enumerator
        raise ResampleExhaustedException(retry_budget)
