"""
Greedy frontier estimation inside a natural system's local neighbourhood.

The neighbourhood holds every system that keeps the natural system's digits,
multipliers, combinators and the morpheme count of each numeral. Numbers
whose numeral has no alternative are fixed first. The others are expanded
`gamma` at a time, largest numbers first: every archived partial system is
combined with every choice for the next numbers, the combinations are
scored by irregularity and processing complexity, and only the Pareto
dominant ones are kept (at most `beta`, sampled when there are more).
"""

from dataclasses import dataclass
from itertools import product
from typing import Dict, FrozenSet, List

import numpy as np

from Constants import (
    DEFAULT_BETA,
    DEFAULT_GAMMA,
    DEFAULT_LOCAL_DEPTH,
    DEFAULT_SEED,
    Combinator,
    Direction,
    SystemSource,
)
from automaton.minimal_dfa_builder import build_from_words
from calc.irregularity import irregularity
from calc.processing_complexity import weighted_processing_bits
from exception.configuration import ConfigurationException
from exception.search import EmptyNeighbourhoodException
from grammar.hurford_enumerator import HurfordEnumerator
from log_config import main_logger
from model.grammar_params import REQUIRED_COMBINATORS, GrammarParams
from model.numeral_expr import combinators, linearize
from model.numeral_system import NumeralSystem
from search.pareto import ScoredPoint, pareto_front
from util.parallel import ordered_map

logger = main_logger.getChild("local")


@dataclass(frozen=True)
class LocalNeighbourhoodKey:
    digits: FrozenSet[int]
    multipliers: FrozenSet[int]
    combinators: FrozenSet[Combinator]
    lengths: Dict[int, int]

    @staticmethod
    def of(system):
        return LocalNeighbourhoodKey(
            system.digit_values(),
            system.multiplier_values(),
            system.combinator_set(),
            system.lengths(),
        )

    def params(self, depth):
        # '+' and '*' are always part of the grammar; unused ones are filtered out
        return GrammarParams(
            self.digits or self.multipliers,
            self.multipliers or self.digits,
            self.combinators | REQUIRED_COMBINATORS,
            depth,
        )

    def admits(self, expr):
        return set(combinators(expr)) <= self.combinators

    def check(self, system):
        """
        Raises AssertionError unless the system lies in this neighbourhood.

        Only multiplier positions (right of `*`, an atom left of `+`/`-`) are
        restricted to M. Any other atom is a Num, which may be a digit or a
        lone Phrase, so it may come from D or M: Karo Batak 20 = `10 + 10`
        belongs to the neighbourhood although 10 is not one of its digits.
        """
        assert system.lengths() == self.lengths, "numeral lengths differ"
        assert system.combinator_set() <= self.combinators, "foreign combinator"
        atoms = self.digits | self.multipliers
        assert system.atom_values() <= atoms, "foreign number atom"
        assert system.multiplier_values() <= self.multipliers, "foreign multiplier"


@dataclass(frozen=True)
class LocalSearchConfig:
    beta: int = DEFAULT_BETA
    gamma: int = DEFAULT_GAMMA
    depth: int = DEFAULT_LOCAL_DEPTH
    direction: Direction = Direction.BEST
    seed: int = DEFAULT_SEED

    def __post_init__(self):
        object.__setattr__(self, "direction", Direction(self.direction))
        if self.beta < 1 or self.gamma < 1 or self.depth < 1:
            raise ConfigurationException(
                "beta, gamma and depth must be positive: {}, {}, {}".format(
                    self.beta, self.gamma, self.depth
                )
            )

    def with_direction(self, direction):
        return LocalSearchConfig(self.beta, self.gamma, self.depth, direction, self.seed)


@dataclass
class FrontierMember:
    system: NumeralSystem
    irregularity_bits: float
    processing_bits: float


@dataclass
class LocalFrontierResult:
    key: LocalNeighbourhoodKey
    direction: Direction
    members: List[FrontierMember]
    neighbourhood_size: int

    @property
    def systems(self):
        return [m.system for m in self.members]


class LocalFrontierSearch:
    def __init__(self, natural, config, prior, threads=None):
        if natural.number_range != prior.number_range:
            raise ConfigurationException(
                "Prior range {} does not match system range {}".format(
                    prior.number_range, natural.number_range
                ),
                "range",
            )
        self.natural = natural
        self.config = config
        self.prior = prior
        self.threads = threads
        self.key = LocalNeighbourhoodKey.of(natural)
        self.enumerator = HurfordEnumerator(self.key.params(config.depth))
        self.rng = np.random.default_rng(config.seed)

    def alternatives(self):
        alternatives = {}
        for n, length in self.key.lengths.items():
            found = [
                e for e in self.enumerator.alternatives(n, length) if self.key.admits(e)
            ]
            if not found:
                raise EmptyNeighbourhoodException(n, length)
            alternatives[n] = found
        return alternatives

    def score(self, partial):
        words = {n: linearize(e) for n, e in partial.items()}
        automaton = build_from_words(words.values())
        processing = weighted_processing_bits(
            automaton, words, self.prior.restricted(words.keys())
        )
        return ScoredPoint(irregularity(automaton), processing, partial)

    def run(self):
        config = self.config
        alternatives = self.alternatives()
        fixed = {n: alts[0] for n, alts in alternatives.items() if len(alts) == 1}
        pending = sorted((n for n in alternatives if n not in fixed), reverse=True)
        size = int(np.prod([len(a) for a in alternatives.values()], dtype=object))

        logger.info(
            "Neighbourhood of '{}': {} fixed numerals, {} open, {} systems, direction {}".format(
                self.natural.label, len(fixed), len(pending), size, config.direction
            )
        )

        archive = [fixed]
        for start in range(0, len(pending), config.gamma):
            chunk = pending[start: start + config.gamma]
            candidates = []
            for partial in archive:
                for choice in product(*(alternatives[n] for n in chunk)):
                    extended = dict(partial)
                    extended.update(zip(chunk, choice))
                    candidates.append(extended)
            points = ordered_map(self.score, candidates, self.threads)
            archive = [p.payload for p in self.select(points)]
            logger.debug(
                "Expanded {}: {} candidates -> {} kept".format(
                    chunk, len(candidates), len(archive)
                )
            )

        points = [self.score(partial) for partial in archive]
        if not pending:
            points = self.select(points)
        members = []
        for i, point in enumerate(points):
            system = NumeralSystem(
                self.natural.number_range,
                point.payload,
                "{}_local_{}_{:02d}".format(self.natural.label, config.direction, i),
                SystemSource.LOCAL,
                self.natural.family,
            )
            self.key.check(system)
            members.append(FrontierMember(system, point.x, point.y))
        return LocalFrontierResult(self.key, config.direction, members, size)

    def select(self, points):
        if self.config.direction is Direction.WORST:
            front = [p.negated() for p in pareto_front([p.negated() for p in points])]
        else:
            front = pareto_front(points)
        if len(front) > self.config.beta:
            keep = sorted(
                self.rng.choice(len(front), size=self.config.beta, replace=False)
            )
            front = [front[int(i)] for i in keep]
        return front


def local_frontier(natural, config, prior, threads=None):
    return LocalFrontierSearch(natural, config, prior, threads).run()


def local_frontier_extremes(natural, config, prior, threads=None):
    """Frontiers of both directions: the most and the least efficient systems."""
    return {
        direction: local_frontier(
            natural, config.with_direction(direction), prior, threads
        )
        for direction in (Direction.BEST, Direction.WORST)
    }
