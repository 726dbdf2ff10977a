from math import log2
from unittest import TestCase

import pytest

from automaton.minimal_dfa_builder import build_from_words, build_minimal_dfa
from calc.irregularity import irregularity, irregularity_from_sizes
from calc.measure_calculator import MeasureCalculator, score
from calc.morphosyntax import avg_morph_complexity, lexicon_size, morph_complexity
from calc.processing_complexity import path_cost, processing_complexity, weighted_processing_bits
from Constants import SystemSource
from model.grammar_params import GrammarParams
from model.numeral_expr import parse_tokens
from model.numeral_system import NumberRange, NumeralSystem
from model.prior import make_prior
from tests.utils import FULL_RANGE, flat_system, karo_batak_system, mandarin_like_system

POWER2 = make_prior("power2", FULL_RANGE)
UNIFORM = make_prior("uniform", FULL_RANGE)


class TestIrregularity(TestCase):
    def test_karo_batak(self):
        automaton = build_minimal_dfa(karo_batak_system())
        self.assertAlmostEqual(irregularity(automaton), 192.4377, places=3)

    def test_from_sizes(self):
        expected = 21 * (2 * log2(6) + log2(12)) + log2(6) + 6
        self.assertAlmostEqual(irregularity_from_sizes(21, 6, 12), expected)


class TestProcessingComplexity(TestCase):
    def setUp(self):
        self.automaton = build_minimal_dfa(karo_batak_system())

    def cost(self, text):
        return path_cost(self.automaton, self.automaton.parse(tuple(text.split())))

    def test_path_costs(self):
        self.assertAlmostEqual(self.cost("7"), log2(9) + 1)
        self.assertAlmostEqual(self.cost("2 * 10"), 5.1699, places=4)
        self.assertAlmostEqual(self.cost("9 * 10 + 6"), 9.3399, places=4)

    def test_flat_system(self):
        system = flat_system()
        automaton = build_minimal_dfa(system)
        for prior in (POWER2, UNIFORM):
            self.assertAlmostEqual(
                processing_complexity(system, automaton, prior), log2(99) + 1
            )

    def test_partial_weights(self):
        words = {1: ("1",), 2: ("2",)}
        automaton = build_from_words(words.values())
        bits = weighted_processing_bits(automaton, words, {1: 0.5, 2: 0.25})
        self.assertAlmostEqual(bits, 0.75 * 2)


class TestMorphosyntax(TestCase):
    def test_morph_complexity(self):
        self.assertEqual(morph_complexity(parse_tokens("4 * 10 + 3")), 5)
        expr = parse_tokens("( ( ( 2 * 2 + 1 ) * 2 + 1 ) * 2 + 1 ) * 2")
        self.assertEqual(morph_complexity(expr), 15)

    def test_lexicon_size(self):
        self.assertEqual(lexicon_size(karo_batak_system()), 10)
        self.assertEqual(lexicon_size(mandarin_like_system()), 10)
        self.assertEqual(lexicon_size(GrammarParams({1, 2, 10}, {10})), 3)

    def test_average_under_uniform(self):
        system = karo_batak_system()
        expected = sum(system.lengths().values()) / 99
        self.assertAlmostEqual(avg_morph_complexity(system, UNIFORM), expected)


class TestMeasureCalculator(TestCase):
    def test_report(self):
        report = score(karo_batak_system(), POWER2)
        self.assertEqual(report.system_label, "karo_batak")
        self.assertEqual(report.source, SystemSource.NATURAL)
        self.assertEqual(report.prior, "power2")
        self.assertAlmostEqual(report.irregularity_bits, 192.4377, places=3)
        self.assertEqual(report.lexicon_size, 10)
        self.assertGreater(report.processing_bits, 0)

    def test_range_mismatch(self):
        prior = make_prior("power2", NumberRange(1, 30))
        with self.assertRaises(ValueError):
            MeasureCalculator(prior).score(karo_batak_system())

    def test_score_all_keeps_order(self):
        systems = [flat_system(), karo_batak_system(), mandarin_like_system()]
        reports = MeasureCalculator(POWER2).score_all(systems, threads=2)
        self.assertEqual([r.system_label for r in reports], ["flat", "karo_batak", "mandarin_like"])


@pytest.mark.parametrize("prior", [POWER2, UNIFORM])
def test_scores_are_deterministic(prior):
    first = score(karo_batak_system(), prior)
    second = score(karo_batak_system(), prior)
    assert first == second


@pytest.mark.parametrize("states, alphabet", [(2, 2), (6, 12), (50, 100)])
def test_irregularity_grows_with_transitions(states, alphabet):
    bits = [irregularity_from_sizes(z, states, alphabet) for z in range(1, 200)]
    assert all(a < b for a, b in zip(bits, bits[1:]))


def test_irregularity_grows_with_lexicon_of_flat_systems():
    automata = [build_minimal_dfa(flat_system(NumberRange(1, hi))) for hi in range(2, 30)]
    assert {a.state_count for a in automata} == {2}
    bits = [irregularity(a) for a in automata]
    assert all(a < b for a, b in zip(bits, bits[1:]))


def twenties_system():
    """Every numeral 2 * 10 + d passes the same branching points."""
    number_range = NumberRange(21, 24)
    entries = {n: parse_tokens("2 * 10 + {}".format(n - 20)) for n in number_range.numbers()}
    return NumeralSystem(number_range, entries, "twenties", SystemSource.MANUAL)


@pytest.mark.parametrize(
    "system, cost", [(flat_system(), log2(99) + 1), (twenties_system(), 3.0)]
)
@pytest.mark.parametrize("descriptor", ["power2", "uniform", "power1"])
def test_equal_path_costs_ignore_the_prior(system, cost, descriptor):
    prior = make_prior(descriptor, system.number_range)
    report = MeasureCalculator(prior).score(system)
    assert report.processing_bits == pytest.approx(cost)
