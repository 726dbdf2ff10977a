from dataclasses import dataclass
from typing import List

import numpy as np

from Constants import (
    DEFAULT_BATCHES,
    DEFAULT_MAX_DEPTH,
    DEFAULT_MAX_DIGITS,
    DEFAULT_MAX_MULTIPLIERS,
    DEFAULT_MIN_DIGITS,
    DEFAULT_MIN_MULTIPLIERS,
    DEFAULT_PER_BATCH,
    DEFAULT_RETRY_BUDGET,
    DEFAULT_SEED,
    DEFAULT_SUBTRACTION_PROBABILITY,
    SystemSource,
)
from log_config import main_logger
from model.grammar_params import GrammarParams
from model.numeral_system import NumberRange, NumeralSystem
from search.grammar_sampler import GrammarSampler
from util.parallel import ordered_map

logger = main_logger.getChild("baselines")


@dataclass
class BaselineConfig:
    pools: object
    number_range: NumberRange = NumberRange()
    batches: int = DEFAULT_BATCHES
    per_batch: int = DEFAULT_PER_BATCH
    max_depth: int = DEFAULT_MAX_DEPTH
    seed: int = DEFAULT_SEED
    digit_bounds: tuple = (DEFAULT_MIN_DIGITS, DEFAULT_MAX_DIGITS)
    multiplier_bounds: tuple = (DEFAULT_MIN_MULTIPLIERS, DEFAULT_MAX_MULTIPLIERS)
    subtraction_probability: float = DEFAULT_SUBTRACTION_PROBABILITY
    retry_budget: int = DEFAULT_RETRY_BUDGET


@dataclass(frozen=True)
class BaselineBatch:
    index: int
    params: GrammarParams
    systems: List[NumeralSystem]


class BaselineSampler:
    """
    Each batch fixes one expressible grammar and draws `per_batch` systems
    from it, every number getting a numeral chosen uniformly among all the
    grammar's numerals for it up to the depth limit.
    """

    def __init__(self, config, threads=None):
        self.config = config
        self.threads = threads
        self.sampler = GrammarSampler(
            config.pools,
            max_depth=config.max_depth,
            digit_bounds=config.digit_bounds,
            multiplier_bounds=config.multiplier_bounds,
            subtraction_probability=config.subtraction_probability,
        )

    def batch_generators(self):
        # one independent stream per batch keeps results stable under threading
        children = np.random.SeedSequence(self.config.seed).spawn(self.config.batches)
        return [np.random.default_rng(child) for child in children]

    def run_batch(self, indexed_rng):
        index, rng = indexed_rng
        config = self.config
        params, enumerator = self.sampler.sample_expressible(
            rng, config.number_range, config.retry_budget
        )
        systems = []
        for i in range(config.per_batch):
            entries = {
                n: enumerator.sample(n, rng) for n in config.number_range.numbers()
            }
            systems.append(
                NumeralSystem(
                    config.number_range,
                    entries,
                    "baseline_{:04d}_{:04d}".format(index, i),
                    SystemSource.BASELINE,
                )
            )
        logger.info(
            "Batch {}/{}: {} -> {} systems".format(
                index + 1, config.batches, params, len(systems)
            )
        )
        return BaselineBatch(index, params, systems)

    def run(self):
        return ordered_map(
            self.run_batch, enumerate(self.batch_generators()), self.threads
        )


def sample_baselines(config, threads=None):
    batches = BaselineSampler(config, threads).run()
    return [system for batch in batches for system in batch.systems]
