"""
Pareto genetic algorithm over (D, M) pairs.

Every candidate grammar is turned into a numeral system by keeping the
shortest numeral for each number, then scored by lexicon size and the
prior-weighted average morpheme count, both minimised. The archive holds the
Pareto-dominant candidates found so far; each generation breeds offspring
from archive members through one to `max_mutations` random mutations of D
or M and merges them back in.
"""

from dataclasses import dataclass, field
from typing import FrozenSet, List, Optional

import numpy as np

from Constants import (
    DEFAULT_MAX_DEPTH,
    DEFAULT_MAX_DIGITS,
    DEFAULT_MAX_GENERATIONS,
    DEFAULT_MAX_MULTIPLIERS,
    DEFAULT_MAX_MUTATIONS,
    DEFAULT_MIN_DIGITS,
    DEFAULT_MIN_MULTIPLIERS,
    DEFAULT_POPULATION_SIZE,
    DEFAULT_RETRY_BUDGET,
    DEFAULT_SEED,
    SystemSource,
    Combinator,
)
from calc.morphosyntax import avg_morph_complexity
from exception.configuration import ConfigurationException
from exception.search import ResampleExhaustedException
from grammar.hurford_enumerator import HurfordEnumerator
from log_config import main_logger
from model.grammar_params import GrammarParams
from search.constraints import FreeDigits, mutate_set
from search.grammar_sampler import GrammarSampler
from search.pareto import ScoredPoint, hypervolume, pareto_front

logger = main_logger.getChild("ga")


@dataclass
class GaConfig:
    prior: object
    pools: object
    population_size: int = DEFAULT_POPULATION_SIZE
    max_generations: int = DEFAULT_MAX_GENERATIONS
    seed: int = DEFAULT_SEED
    combinators: FrozenSet[Combinator] = frozenset(Combinator)
    max_mutations: int = DEFAULT_MAX_MUTATIONS
    max_depth: int = DEFAULT_MAX_DEPTH
    digit_policy: object = field(default_factory=FreeDigits)
    digit_bounds: tuple = (DEFAULT_MIN_DIGITS, DEFAULT_MAX_DIGITS)
    multiplier_bounds: tuple = (DEFAULT_MIN_MULTIPLIERS, DEFAULT_MAX_MULTIPLIERS)
    retry_budget: int = DEFAULT_RETRY_BUDGET

    @property
    def number_range(self):
        return self.prior.number_range

    def validate(self):
        if self.pools is None:
            raise ConfigurationException("GA needs attested pools", "attested_digits")
        self.pools.check()
        if self.population_size < 1 or self.max_generations < 0:
            raise ConfigurationException(
                "Population size must be positive and generations non-negative"
            )
        if self.max_mutations < 1:
            raise ConfigurationException(
                "At least one mutation per offspring is required", "max_mutations"
            )


@dataclass(frozen=True)
class GaIndividual:
    params: GrammarParams
    system: object
    lexicon_size: int
    avg_morph_complexity: float

    def point(self):
        return ScoredPoint(self.lexicon_size, self.avg_morph_complexity, self)


@dataclass(frozen=True)
class GaGeneration:
    index: int
    archive_size: int
    evaluated: int
    hypervolume: float


@dataclass
class GaResult:
    archive: List[GaIndividual]
    history: List[GaGeneration]
    reference: tuple


class GeneticAlgorithm:
    def __init__(self, config):
        config.validate()
        self.config = config
        self.rng = np.random.default_rng(config.seed)
        self.sampler = GrammarSampler(
            config.pools,
            max_depth=config.max_depth,
            digit_bounds=config.digit_bounds,
            multiplier_bounds=config.multiplier_bounds,
            digit_policy=config.digit_policy,
        )
        self.__cache = {}
        self.reference = (
            config.digit_policy.max_size(config.pools.digits)
            + len(config.pools.multipliers)
            + 1,
            float(2 * config.max_depth),
        )

    def evaluate(self, params) -> Optional[GaIndividual]:
        """Scores a grammar, or None when it cannot express the range."""
        key = params.key()
        if key not in self.__cache:
            enumerator = HurfordEnumerator(params)
            if not enumerator.expressible(self.config.number_range):
                self.__cache[key] = None
            else:
                system = enumerator.shortest_system(
                    self.config.number_range, self._label(params), SystemSource.GA
                )
                self.__cache[key] = GaIndividual(
                    params,
                    system,
                    params.lexicon_size,
                    avg_morph_complexity(system, self.config.prior),
                )
        return self.__cache[key]

    @property
    def evaluated(self):
        return len(self.__cache)

    def initial_population(self):
        population = []
        for _ in range(self.config.population_size):
            params, _ = self.sampler.sample_expressible(
                self.rng,
                self.config.number_range,
                self.config.retry_budget,
                combinators=self.config.combinators,
            )
            population.append(self.evaluate(params))
        return population

    def mutate(self, params):
        digits, multipliers = params.digits, params.multipliers
        for _ in range(int(self.rng.integers(1, self.config.max_mutations + 1))):
            if self.rng.random() < 0.5:
                digits = self.config.digit_policy.mutate(
                    digits, self.rng, self.config.pools.digits
                )
            else:
                multipliers = mutate_set(
                    multipliers, self.rng, self.config.pools.multipliers
                )
        return digits, multipliers

    def offspring(self, parent):
        for _ in range(self.config.retry_budget):
            digits, multipliers = self.mutate(parent.params)
            if not digits or not multipliers:
                continue
            if not self.config.digit_policy.accepts(digits):
                continue
            child = self.evaluate(parent.params.with_sets(digits, multipliers))
            if child is not None:
                return child
        raise ResampleExhaustedException(self.config.retry_budget)

    def run(self):
        config = self.config
        logger.info(
            "GA: population {}, {} generations, prior {}, seed {}".format(
                config.population_size,
                config.max_generations,
                config.prior,
                config.seed,
            )
        )

        archive = self.select(self.initial_population())
        history = [self.record(0, archive)]

        for generation in range(1, config.max_generations + 1):
            parents = [
                archive[int(i)]
                for i in self.rng.integers(len(archive), size=config.population_size)
            ]
            children = [self.offspring(parent) for parent in parents]
            archive = self.select(archive + children)
            history.append(self.record(generation, archive))

        return GaResult(archive, history, self.reference)

    @staticmethod
    def select(individuals):
        front = pareto_front([ind.point() for ind in individuals])
        seen = set()
        archive = []
        for p in front:
            key = p.payload.params.key()
            if key not in seen:
                seen.add(key)
                archive.append(p.payload)
        return archive

    def record(self, generation, archive):
        volume = hypervolume([ind.point() for ind in archive], self.reference)
        logger.info(
            "Generation {}: archive {} individuals, {} grammars evaluated, hypervolume {:.4f}".format(
                generation, len(archive), self.evaluated, volume
            )
        )
        return GaGeneration(generation, len(archive), self.evaluated, volume)

    @staticmethod
    def _label(params):
        return "ga_D{}_M{}_C{}".format(
            "-".join(str(d) for d in sorted(params.digits)),
            "-".join(str(m) for m in sorted(params.multipliers)),
            "".join(
                {"+": "p", "-": "m", "*": "t"}[c.value]
                for c in sorted(params.combinators, key=lambda c: c.value)
            ),
        )


def run_ga(config):
    return GeneticAlgorithm(config).run()
