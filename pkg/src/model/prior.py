from dataclasses import dataclass, field

import numpy as np

from Constants import (
    DEFAULT_POWER_LAW_EXPONENT,
    POWER_LAW_PREFIX,
    PRIOR_SUM_TOLERANCE,
    UNIFORM_PRIOR,
)
from exception.configuration import ConfigurationException

KIND_POWER_LAW = "powerLaw"
KIND_UNIFORM = "uniform"


@dataclass(frozen=True, eq=False)
class Prior:
    """Communicative need over a number range, P(n) > 0 summing to one."""

    kind: str
    number_range: object
    exponent: float = 0.0
    weights: np.ndarray = field(default=None, repr=False)

    def weight(self, n):
        return float(self.weights[n - self.number_range.lo])

    def as_dict(self):
        return {
            n: float(w) for n, w in zip(self.number_range.numbers(), self.weights)
        }

    def restricted(self, numbers):
        """Weights of a subset of the range, not renormalised."""
        return {n: self.weight(n) for n in numbers}

    @property
    def descriptor(self):
        if self.kind == KIND_UNIFORM:
            return UNIFORM_PRIOR
        return POWER_LAW_PREFIX + _format_exponent(self.exponent)

    def __str__(self):
        return self.descriptor


def _format_exponent(exponent):
    exponent = float(exponent)
    if exponent.is_integer():
        return str(int(exponent))
    return repr(exponent)


def parse_prior_descriptor(descriptor):
    """
    'uniform' -> (uniform, 0); 'power<k>' -> (powerLaw, k). A bare 'power'
    means the default exponent.
    """
    text = str(descriptor).strip().lower()
    if text == UNIFORM_PRIOR:
        return KIND_UNIFORM, 0.0
    if text.startswith(POWER_LAW_PREFIX):
        rest = text[len(POWER_LAW_PREFIX):]
        if not rest:
            return KIND_POWER_LAW, DEFAULT_POWER_LAW_EXPONENT
        try:
            exponent = float(rest)
        except ValueError:
            raise ConfigurationException(
                "Unknown prior '{}'".format(descriptor), "prior"
            )
        if not np.isfinite(exponent) or exponent <= 0:
            raise ConfigurationException(
                "Power-law exponent must be positive: '{}'".format(descriptor),
                "prior",
            )
        return KIND_POWER_LAW, exponent
    raise ConfigurationException("Unknown prior '{}'".format(descriptor), "prior")


def make_prior(descriptor, number_range):
    kind, exponent = parse_prior_descriptor(descriptor)
    numbers = np.arange(number_range.lo, number_range.hi + 1, dtype=np.float64)
    if kind == KIND_UNIFORM:
        raw = np.ones_like(numbers)
    else:
        raw = numbers ** (-exponent)
    weights = raw / raw.sum()
    weights.setflags(write=False)

    total = float(weights.sum())
    if abs(total - 1.0) >= PRIOR_SUM_TOLERANCE or not np.all(weights > 0):
        raise ConfigurationException(
            "Prior '{}' over {} does not normalise (sum={})".format(
                descriptor, number_range, total
            ),
            "prior",
        )
    return Prior(kind, number_range, exponent, weights)
