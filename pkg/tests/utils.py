from os.path import dirname, join

from Constants import SystemSource
from grammar.hurford_enumerator import shortest_system
from model.grammar_params import GrammarParams
from model.numeral_expr import Atom, plus, times
from model.numeral_system import NumberRange, NumeralSystem

DATA_DIR = join(dirname(__file__), "data")
NATURAL_SYSTEMS_CSV = join(DATA_DIR, "natural_systems.csv")
EXPERIMENT_YAML = join(DATA_DIR, "experiment.yaml")

FULL_RANGE = NumberRange(1, 99)


def karo_batak_system(number_range=FULL_RANGE):
    """1-9 as digits, every other number as D * 10 or D * 10 + D."""
    entries = {}
    for n in number_range.numbers():
        tens, units = divmod(n, 10)
        if n < 10:
            entries[n] = Atom(n)
        elif units == 0:
            entries[n] = times(Atom(tens), 10)
        else:
            entries[n] = plus(times(Atom(tens), 10), Atom(units))
    return NumeralSystem(
        number_range, entries, "karo_batak", SystemSource.NATURAL, "Austronesian"
    )


def drehu_like_system(number_range=FULL_RANGE):
    """Digits 1-4 with multipliers 5, 10, 15 and 20: 2 * 20 + 15 + 3, ..."""
    entries = {}
    for n in number_range.numbers():
        scores, rest = divmod(n, 20)
        fives, units = divmod(rest, 5)
        parts = []
        if scores:
            parts.append(times(Atom(scores), 20))
        if fives:
            parts.append(Atom(5 * fives))
        if units:
            parts.append(Atom(units))
        expr = parts[-1]
        for part in reversed(parts[:-1]):
            expr = plus(part, expr)
        entries[n] = expr
    return NumeralSystem(number_range, entries, "drehu_like", SystemSource.NATURAL, "Austronesian")


def mandarin_like_system(number_range=FULL_RANGE):
    """Shortest numerals of the decimal grammar: 10 + 3, 4 * 10 + 3, ..."""
    params = GrammarParams(range(1, 10), {10})
    return shortest_system(params, number_range, "mandarin_like", SystemSource.NATURAL)


def flat_system(number_range=FULL_RANGE):
    """One dedicated morpheme per number."""
    entries = {n: Atom(n) for n in number_range.numbers()}
    return NumeralSystem(number_range, entries, "flat", SystemSource.MANUAL)


def brute_force_state_count(words):
    """
    Number of distinct non-empty residual languages over the prefixes of a
    finite language, i.e. the state count of its minimal partial DFA.
    """
    words = {tuple(w) for w in words}
    residuals = set()
    prefixes = {w[:i] for w in words for i in range(len(w) + 1)}
    for prefix in prefixes:
        residual = frozenset(w[len(prefix):] for w in words if w[: len(prefix)] == prefix)
        residuals.add(residual)
    return len(residuals)
