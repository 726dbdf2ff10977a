from unittest import TestCase

import numpy as np
import pytest

from exception.expression import InvalidExpressionException
from exception.grammar import IncompleteGrammarException
from grammar.hurford_enumerator import (
    HurfordEnumerator,
    enumerate_numerals,
    expressible,
    shortest_system,
)
from model.grammar_params import GrammarParams
from model.numeral_expr import Atom, evaluate, minus, plus, times, to_token_string
from model.numeral_system import NumberRange
from tests.utils import FULL_RANGE

SMALL = GrammarParams({1, 2}, {5, 10, 12})
DREHU = GrammarParams({1, 2, 3, 4}, {5, 10, 15, 20})
GAPPY = GrammarParams({1, 2}, {3})
WITH_MINUS = GrammarParams({1, 2}, {5, 10}, {"+", "*", "-"}, max_depth=3)


def token_strings(exprs):
    return {to_token_string(e) for e in exprs}


class TestHurfordEnumerator(TestCase):
    def test_candidates_of_twelve(self):
        result = enumerate_numerals(SMALL, 12)
        found = token_strings(result.candidates)
        self.assertTrue(
            {"12", "1 * 12", "10 + 2", "1 * 10 + 2", "2 * 5 + 2"} <= found, found
        )
        for expr in result.candidates:
            self.assertEqual(evaluate(expr), 12)
            self.assertLessEqual(expr.atom_count, SMALL.max_depth)
        self.assertEqual(to_token_string(result.sorted_candidates()[0]), "12")

    def test_count_matches_enumeration(self):
        enumerator = HurfordEnumerator(DREHU)
        for n in (1, 7, 24, 39, 60, 99):
            self.assertEqual(enumerator.count(n), len(enumerator.enumerate(n)), n)

    def test_count_matches_enumeration_with_subtraction(self):
        enumerator = HurfordEnumerator(WITH_MINUS)
        for n in (3, 8, 9, 19, 48):
            self.assertEqual(enumerator.count(n), len(enumerator.enumerate(n)), n)
        self.assertIn("10 - 1", token_strings(enumerator.enumerate(9).candidates))

    def test_candidates_grow_with_depth(self):
        enumerator = HurfordEnumerator(DREHU)
        previous = set()
        for depth in range(1, DREHU.max_depth + 1):
            current = set(enumerator.enumerate(24, depth).candidates)
            self.assertTrue(previous <= current)
            previous = current

    def test_alternatives_of_fixed_length(self):
        enumerator = HurfordEnumerator(DREHU)
        found = token_strings(enumerator.alternatives(24, 5))
        self.assertTrue(
            {"4 * 5 + 4", "5 + 15 + 4", "15 + 5 + 4", "10 + 10 + 4", "1 * 20 + 4", "2 * 10 + 4"}
            <= found,
            found,
        )
        self.assertEqual(enumerator.alternatives(24, 4), [])
        for expr in enumerator.alternatives(24, 5):
            self.assertEqual(expr.morpheme_count, 5)

    def test_gap_in_grammar(self):
        enumerator = HurfordEnumerator(GAPPY)
        self.assertEqual(len(enumerator.enumerate(97)), 0)
        self.assertFalse(expressible(GAPPY, FULL_RANGE))
        with self.assertRaises(IncompleteGrammarException) as cm:
            shortest_system(GAPPY, FULL_RANGE)
        self.assertGreater(cm.exception.number, 1)
        with self.assertRaises(IncompleteGrammarException):
            enumerator.sample(97, np.random.default_rng(0))

    def test_drehu_is_complete(self):
        self.assertTrue(expressible(DREHU, FULL_RANGE))

    def test_shortest_system_is_valid(self):
        system = shortest_system(DREHU, NumberRange(1, 30), "drehu")
        self.assertEqual(system.token_string(5), "5")
        self.assertEqual(system.token_string(24), "20 + 4")
        self.assertEqual(len(system), 30)


@pytest.mark.parametrize("n", [12, 24, 47, 99])
def test_samples_are_candidates(n):
    enumerator = HurfordEnumerator(DREHU)
    rng = np.random.default_rng(7)
    candidates = enumerator.enumerate(n).candidates
    for _ in range(50):
        assert enumerator.sample(n, rng) in candidates


def test_sampling_reaches_every_candidate():
    enumerator = HurfordEnumerator(SMALL)
    rng = np.random.default_rng(3)
    candidates = enumerator.enumerate(12).candidates
    seen = {enumerator.sample(12, rng) for _ in range(20 * len(candidates))}
    assert seen == set(candidates)


def all_trees(params):
    """Every numeral of the grammar with at most max_depth atoms, valid or not."""
    combine = [plus, minus] if params.allows_minus else [plus]
    nums = {1: {Atom(v) for v in params.digits | params.multipliers}}
    phrases = {1: {Atom(m) for m in params.multipliers}}
    for k in range(2, params.max_depth + 1):
        phrases[k] = {times(x, m) for x in nums[k - 1] for m in params.multipliers}
        nums[k] = set(phrases[k])
        for j in range(1, k):
            for p in phrases[j]:
                for x in nums[k - j]:
                    nums[k].update(op(p, x) for op in combine)
    return set().union(*nums.values())


def trees_by_value(params):
    found = {}
    for tree in all_trees(params):
        try:
            value = evaluate(tree)
        except InvalidExpressionException:
            continue
        found.setdefault(value, set()).add(tree)
    return found


@pytest.mark.parametrize(
    "params",
    [
        GrammarParams({1, 2}, {5, 10}, max_depth=3),
        GrammarParams({1, 2, 3}, {4, 7, 9}, max_depth=3),
        WITH_MINUS,
        GrammarParams({2}, {3}, {"+", "*", "-"}, max_depth=2),
    ],
)
def test_enumeration_matches_exhaustive_search(params):
    expected = trees_by_value(params)
    enumerator = HurfordEnumerator(params)
    for n in range(1, max(expected) + 2):
        result = enumerator.enumerate(n)
        assert result.candidates == frozenset(expected.get(n, ())), n
        assert enumerator.count(n) == len(expected.get(n, ()))
