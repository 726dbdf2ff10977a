from unittest import TestCase

import numpy as np
import pytest

from Constants import Combinator
from exception.expression import InvalidExpressionException, ParseException
from model.morpheme import Morpheme, is_number_token, token_sort_key
from model.numeral_expr import (
    Atom,
    digit_atoms,
    evaluate,
    linearize,
    minus,
    multiplier_atoms,
    parse_tokens,
    plus,
    times,
    to_token_string,
)

NUMERAL_46 = "( ( ( 2 * 2 + 1 ) * 2 + 1 ) * 2 + 1 ) * 2"


class TestNumeralExpr(TestCase):
    def test_evaluate_decimal_numeral(self):
        expr = plus(times(Atom(4), 10), Atom(3))
        self.assertEqual(evaluate(expr), 43)
        self.assertEqual(expr.morpheme_count, 5)
        self.assertEqual(to_token_string(expr), "4 * 10 + 3")

    def test_plus_and_minus_associate_to_the_right(self):
        expr = parse_tokens("5 + 15 + 4")
        self.assertEqual(expr, plus(Atom(5), plus(Atom(15), Atom(4))))
        self.assertEqual(evaluate(expr), 24)

        self.assertEqual(evaluate(parse_tokens("20 - 5 + 1")), 14)

    def test_subtraction_intermediate_above_range(self):
        self.assertEqual(evaluate(minus(Atom(25), Atom(6))), 19)

    def test_non_positive_value_is_invalid(self):
        with self.assertRaises(InvalidExpressionException):
            evaluate(minus(Atom(5), Atom(5)))
        with self.assertRaises(InvalidExpressionException):
            evaluate(parse_tokens("2 - 3"))

    def test_intermediate_cap(self):
        with self.assertRaises(InvalidExpressionException):
            evaluate(parse_tokens("1000 * 1000 * 2"))

    def test_shape_is_checked_at_construction(self):
        with self.assertRaises(InvalidExpressionException):
            times(Atom(2), plus(Atom(10), Atom(1)))
        with self.assertRaises(InvalidExpressionException):
            plus(plus(Atom(10), Atom(1)), Atom(2))
        with self.assertRaises(InvalidExpressionException):
            Atom(0)

    def test_parenthesised_product_round_trips(self):
        expr = parse_tokens(NUMERAL_46)
        self.assertEqual(evaluate(expr), 46)
        self.assertEqual(expr.atom_count, 8)
        self.assertEqual(expr.combinator_count, 7)
        self.assertEqual(expr.morpheme_count, 15)
        self.assertEqual(" ".join(linearize(expr)), NUMERAL_46)

    def test_positions(self):
        expr = parse_tokens("2 * 10 + 10 + 3")
        self.assertEqual(sorted(multiplier_atoms(expr)), [10, 10])
        self.assertEqual(sorted(digit_atoms(expr)), [2, 3])

    def test_lone_atom_is_a_digit(self):
        self.assertEqual(digit_atoms(Atom(10)), (10,))
        self.assertEqual(multiplier_atoms(Atom(10)), ())


@pytest.mark.parametrize(
    "text",
    [
        "",
        "4 * 10 +",
        "4 10",
        "( 2 + 1",
        "2 * ( 5 )",
        "4 ^ 3",
        "0 + 1",
        "10 + 1 + 2 * ( 3 )",
    ],
)
def test_parse_rejects_malformed_input(text):
    with pytest.raises(ParseException):
        parse_tokens(text)


@pytest.mark.parametrize(
    "text, value",
    [
        ("7", 7),
        ("2 * 10", 20),
        ("9 * 10 + 6", 96),
        ("1 * 20 + 4", 24),
        ("( 2 + 1 ) * 2", 6),
        ("2 * 5 * 10", 100),
    ],
)
def test_parse_and_evaluate(text, value):
    expr = parse_tokens(text)
    assert evaluate(expr) == value
    assert to_token_string(expr) == text


def test_token_order_puts_atoms_first():
    tokens = ["(", "*", "10", "+", "2", ")", "-"]
    assert sorted(tokens, key=token_sort_key) == ["2", "10", "+", "-", "*", "(", ")"]


def test_morpheme_tokens():
    assert Morpheme.from_token("10").value == 10
    assert Morpheme.from_token("*").op is Combinator.TIMES
    assert not Morpheme.from_token("(").counts_as_morpheme
    with pytest.raises(ParseException):
        Morpheme.from_token("ten")


@pytest.mark.parametrize("token", ["¹", "١", "٣", "５", "1.5", "-3", "", " 7"])
def test_only_ascii_digits_are_numbers(token):
    assert not is_number_token(token)
    with pytest.raises(ParseException):
        Morpheme.from_token(token)


@pytest.mark.parametrize("text", ["٣", "2 * ١٠", "10 + ²"])
def test_parse_rejects_non_ascii_digits(text):
    with pytest.raises(ParseException):
        parse_tokens(text)


def random_atom(rng):
    return Atom(int(rng.integers(1, 30)))


def random_phrase(rng, depth):
    if depth <= 0 or rng.random() < 0.4:
        return random_atom(rng)
    return times(random_num(rng, depth - 1), int(rng.integers(2, 30)))


def random_num(rng, depth):
    if depth <= 0:
        return random_atom(rng)
    kind = rng.integers(4)
    if kind == 0:
        return random_atom(rng)
    if kind == 1:
        return random_phrase(rng, depth)
    combine = plus if kind == 2 else minus
    return combine(random_phrase(rng, depth - 1), random_num(rng, depth - 1))


def test_random_expressions_round_trip():
    rng = np.random.default_rng(3)
    for _ in range(500):
        expr = random_num(rng, 5)
        tokens = linearize(expr)
        assert parse_tokens(tokens) == expr, tokens
        assert parse_tokens(" ".join(tokens)) == expr
