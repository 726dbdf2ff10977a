from unittest import TestCase

import pytest

from Constants import Combinator, SystemSource
from exception.configuration import ConfigurationException
from model.grammar_params import GrammarParams
from model.numeral_system import NumberRange
from model.prior import make_prior
from search.constraints import SequentialDigits
from search.genetic_algorithm import GaConfig, GeneticAlgorithm, run_ga
from search.grammar_sampler import AttestedPools
from search.pareto import is_mutually_non_dominated

RANGE = NumberRange(1, 30)
PRIOR = make_prior("power2", RANGE)
POOLS = AttestedPools(frozenset(range(1, 11)), frozenset({5, 10, 20}))


def small_config(**overrides):
    values = dict(
        prior=PRIOR,
        pools=POOLS,
        population_size=12,
        max_generations=4,
        seed=3,
        max_depth=4,
        combinators=frozenset({Combinator.PLUS, Combinator.TIMES}),
    )
    values.update(overrides)
    return GaConfig(**values)


class TestGeneticAlgorithm(TestCase):
    @classmethod
    def setUpClass(cls):
        cls.result = run_ga(small_config())

    def test_history(self):
        history = self.result.history
        self.assertEqual([g.index for g in history], list(range(5)))
        for previous, current in zip(history, history[1:]):
            self.assertGreaterEqual(current.hypervolume, previous.hypervolume - 1e-9)
            self.assertGreaterEqual(current.evaluated, previous.evaluated)

    def test_archive_is_a_front(self):
        archive = self.result.archive
        self.assertTrue(archive)
        self.assertTrue(is_mutually_non_dominated([i.point() for i in archive]))
        keys = [i.params.key() for i in archive]
        self.assertEqual(len(keys), len(set(keys)))

    def test_individuals(self):
        for individual in self.result.archive:
            params = individual.params
            self.assertEqual(individual.lexicon_size, len(params.digits | params.multipliers))
            self.assertTrue(params.digits <= POOLS.digits)
            self.assertTrue(params.multipliers <= POOLS.multipliers)
            self.assertEqual(individual.system.source, SystemSource.GA)
            self.assertEqual(individual.system.number_range, RANGE)
            self.assertTrue(individual.system.label.startswith("ga_D"))

    def test_same_seed_same_archive(self):
        again = run_ga(small_config())
        self.assertEqual(
            [i.params.key() for i in again.archive],
            [i.params.key() for i in self.result.archive],
        )
        self.assertEqual(
            [g.hypervolume for g in again.history],
            [g.hypervolume for g in self.result.history],
        )


class TestGaConfig(TestCase):
    def test_invalid_config(self):
        with self.assertRaises(ConfigurationException):
            GeneticAlgorithm(small_config(pools=None))
        with self.assertRaises(ConfigurationException):
            GeneticAlgorithm(small_config(population_size=0))
        with self.assertRaises(ConfigurationException):
            GeneticAlgorithm(small_config(max_mutations=0))

    def test_inexpressible_grammar_scores_none(self):
        ga = GeneticAlgorithm(small_config())
        self.assertIsNone(ga.evaluate(GrammarParams({2, 3}, {10}, max_depth=4)))
        individual = ga.evaluate(GrammarParams(range(1, 10), {10}, max_depth=4))
        self.assertEqual(individual.lexicon_size, 10)
        self.assertEqual(ga.evaluated, 2)


@pytest.mark.parametrize("max_digit", [6, 10])
def test_sequential_digits_constraint(max_digit):
    result = run_ga(
        small_config(digit_policy=SequentialDigits(max_digit), max_generations=3)
    )
    for individual in result.archive:
        k = len(individual.params.digits)
        assert individual.params.digits == frozenset(range(1, k + 1))
        assert k <= max_digit
