"""
Enumeration of the numerals a (D, M, C) grammar assigns to a number.

Depth counts number atoms, so a numeral with k atoms always has k - 1
combinators and 2k - 1 morphemes. Work is split in two layers:

* value sets: for every atom count k < d, the values any Num (resp.
  Phrase) with exactly k atoms can take. They are built bottom-up once and
  prune the top-down search.
* splits: for a target value and atom count, the ways the root node can be
  formed. Counting, uniform sampling and full enumeration all walk the same
  memoised splits, so they agree on the candidate space by construction.
"""

from bisect import bisect_left, bisect_right
from dataclasses import dataclass
from typing import FrozenSet

from Constants import MAX_INTERMEDIATE_VALUE, Combinator, SystemSource
from exception.grammar import IncompleteGrammarException
from log_config import main_logger
from model.numeral_expr import Atom, Node, NumeralExpr, sort_key
from model.numeral_system import NumeralSystem

logger = main_logger.getChild("hurford")

LEAF = ("leaf",)


@dataclass(frozen=True)
class EnumerationResult:
    number: int
    candidates: FrozenSet[NumeralExpr]
    depth_limit: int

    def sorted_candidates(self):
        return sorted(self.candidates, key=sort_key)

    def __len__(self):
        return len(self.candidates)


class _ValueSet:
    """A set of reachable values kept sorted for range scans."""

    def __init__(self, values):
        self.members = frozenset(values)
        self.ordered = sorted(self.members)

    def below(self, bound):
        return self.ordered[: bisect_left(self.ordered, bound)]

    def above(self, bound):
        return self.ordered[bisect_right(self.ordered, bound):]

    def __contains__(self, value):
        return value in self.members

    def __len__(self):
        return len(self.members)


class HurfordEnumerator:
    def __init__(self, params, cap=MAX_INTERMEDIATE_VALUE):
        self.params = params
        self.cap = cap
        self.depth = params.max_depth
        self.multipliers = sorted(params.multipliers)
        self.num_leaves = params.digits | params.multipliers
        self.minus = params.allows_minus

        self.__num_values = {}
        self.__phrase_values = {}
        self.__build_value_sets()

        self.__num_splits = {}
        self.__phrase_splits = {}
        self.__num_counts = {}
        self.__phrase_counts = {}
        self.__num_trees = {}
        self.__phrase_trees = {}

    def __build_value_sets(self):
        num_values = {1: _ValueSet(self.num_leaves)}
        phrase_values = {1: _ValueSet(self.params.multipliers)}

        for k in range(2, self.depth):
            phrases = {
                x * m
                for x in num_values[k - 1].ordered
                for m in self.multipliers
                if x * m <= self.cap
            }
            nums = set(phrases)
            for j in range(1, k):
                for p in phrase_values[j].ordered:
                    for x in num_values[k - j].ordered:
                        if p + x > self.cap:
                            break
                        nums.add(p + x)
                    if self.minus:
                        for x in num_values[k - j].below(p):
                            nums.add(p - x)
            phrase_values[k] = _ValueSet(phrases)
            num_values[k] = _ValueSet(nums)

        self.__num_values = num_values
        self.__phrase_values = phrase_values
        logger.debug(
            "Value sets for {}: {}".format(
                self.params, {k: len(v) for k, v in num_values.items()}
            )
        )

    # splits

    def phrase_splits(self, value, atoms):
        key = (value, atoms)
        if key in self.__phrase_splits:
            return self.__phrase_splits[key]

        splits = []
        if atoms == 1:
            if value in self.params.multipliers:
                splits.append(LEAF)
        elif atoms - 1 in self.__num_values:
            inner_values = self.__num_values[atoms - 1]
            for m in self.multipliers:
                if value % m == 0 and value // m in inner_values:
                    splits.append((Combinator.TIMES, m, value // m))

        self.__phrase_splits[key] = splits
        return splits

    def num_splits(self, value, atoms):
        key = (value, atoms)
        if key in self.__num_splits:
            return self.__num_splits[key]

        if value < 1 or value > self.cap or atoms < 1 or atoms > self.depth:
            splits = []
        elif atoms == 1:
            splits = [LEAF] if value in self.num_leaves else []
        else:
            splits = list(self.phrase_splits(value, atoms))
            for j in range(1, atoms):
                phrases = self.__phrase_values[j]
                rests = self.__num_values[atoms - j]
                for p in phrases.below(value):
                    if value - p in rests:
                        splits.append((Combinator.PLUS, j, p, value - p))
                if self.minus:
                    if len(phrases) <= len(rests):
                        lefts = [p for p in phrases.above(value) if p - value in rests]
                    else:
                        lefts = [
                            value + x
                            for x in rests.ordered
                            if value + x <= self.cap and value + x in phrases
                        ]
                    for p in lefts:
                        splits.append((Combinator.MINUS, j, p, p - value))

        self.__num_splits[key] = splits
        return splits

    # counting

    def count_phrase(self, value, atoms):
        key = (value, atoms)
        if key not in self.__phrase_counts:
            total = 0
            for split in self.phrase_splits(value, atoms):
                if split is LEAF:
                    total += 1
                else:
                    _, m, inner = split
                    total += self.count_num(inner, atoms - 1)
            self.__phrase_counts[key] = total
        return self.__phrase_counts[key]

    def count_num(self, value, atoms):
        key = (value, atoms)
        if key not in self.__num_counts:
            self.__num_counts[key] = sum(
                self._split_count(split, atoms)
                for split in self.num_splits(value, atoms)
            )
        return self.__num_counts[key]

    def _split_count(self, split, atoms):
        if split is LEAF:
            return 1
        if split[0] is Combinator.TIMES:
            return self.count_num(split[2], atoms - 1)
        _, j, left, right = split
        return self.count_phrase(left, j) * self.count_num(right, atoms - j)

    def count(self, n, depth=None):
        depth = self.depth if depth is None else min(depth, self.depth)
        return sum(self.count_num(n, k) for k in range(1, depth + 1))

    # materialisation

    def phrase_trees(self, value, atoms):
        key = (value, atoms)
        if key not in self.__phrase_trees:
            trees = []
            for split in self.phrase_splits(value, atoms):
                if split is LEAF:
                    trees.append(Atom(value))
                else:
                    _, m, inner = split
                    trees.extend(
                        Node(Combinator.TIMES, x, Atom(m))
                        for x in self.num_trees(inner, atoms - 1)
                    )
            self.__phrase_trees[key] = tuple(trees)
        return self.__phrase_trees[key]

    def num_trees(self, value, atoms):
        key = (value, atoms)
        if key not in self.__num_trees:
            trees = []
            for split in self.num_splits(value, atoms):
                if split is LEAF:
                    trees.append(Atom(value))
                elif split[0] is Combinator.TIMES:
                    _, m, inner = split
                    trees.extend(
                        Node(Combinator.TIMES, x, Atom(m))
                        for x in self.num_trees(inner, atoms - 1)
                    )
                else:
                    op, j, left, right = split
                    rights = self.num_trees(right, atoms - j)
                    trees.extend(
                        Node(op, p, x)
                        for p in self.phrase_trees(left, j)
                        for x in rights
                    )
            self.__num_trees[key] = tuple(trees)
        return self.__num_trees[key]

    def enumerate(self, n, depth=None):
        depth = self.depth if depth is None else min(depth, self.depth)
        candidates = frozenset(
            tree for k in range(1, depth + 1) for tree in self.num_trees(n, k)
        )
        return EnumerationResult(n, candidates, depth)

    def alternatives(self, n, morphemes):
        """Candidates for n with exactly the given morpheme count."""
        if morphemes < 1 or morphemes % 2 == 0:
            return []
        atoms = (morphemes + 1) // 2
        return sorted(self.num_trees(n, atoms), key=sort_key)

    # sampling

    def sample(self, n, rng, depth=None):
        """Uniform draw among all candidates of n."""
        depth = self.depth if depth is None else min(depth, self.depth)
        counts = [self.count_num(n, k) for k in range(1, depth + 1)]
        total = sum(counts)
        if total == 0:
            raise IncompleteGrammarException(n)
        pick = int(rng.integers(total))
        for k, c in enumerate(counts, start=1):
            if pick < c:
                return self._sample_num(n, k, pick)
            pick -= c

    def _sample_num(self, value, atoms, pick):
        for split in self.num_splits(value, atoms):
            c = self._split_count(split, atoms)
            if pick >= c:
                pick -= c
                continue
            if split is LEAF:
                return Atom(value)
            if split[0] is Combinator.TIMES:
                _, m, inner = split
                return Node(Combinator.TIMES, self._sample_num(inner, atoms - 1, pick), Atom(m))
            op, j, left, right = split
            right_count = self.count_num(right, atoms - j)
            left_pick, right_pick = divmod(pick, right_count)
            return Node(
                op,
                self._sample_phrase(left, j, left_pick),
                self._sample_num(right, atoms - j, right_pick),
            )
        raise AssertionError("Sample index out of range for {}".format(value))

    def _sample_phrase(self, value, atoms, pick):
        for split in self.phrase_splits(value, atoms):
            if split is LEAF:
                if pick == 0:
                    return Atom(value)
                pick -= 1
                continue
            _, m, inner = split
            c = self.count_num(inner, atoms - 1)
            if pick < c:
                return Node(Combinator.TIMES, self._sample_num(inner, atoms - 1, pick), Atom(m))
            pick -= c
        raise AssertionError("Sample index out of range for {}".format(value))

    # selection

    def min_atoms(self, n):
        for k in range(1, self.depth + 1):
            if self.num_splits(n, k):
                return k
        return None

    def shortest(self, n):
        k = self.min_atoms(n)
        if k is None:
            raise IncompleteGrammarException(n)
        return min(self.num_trees(n, k), key=sort_key)

    def is_expressible(self, n):
        return self.min_atoms(n) is not None

    def shortest_system(self, number_range, label="", source=SystemSource.MANUAL):
        entries = {n: self.shortest(n) for n in number_range.numbers()}
        return NumeralSystem(number_range, entries, label, source)

    def expressible(self, number_range):
        for n in number_range.numbers():
            if not self.is_expressible(n):
                logger.debug("{} cannot express {}".format(self.params, n))
                return False
        return True


def enumerate_numerals(params, n):
    return HurfordEnumerator(params).enumerate(n)


def shortest_system(params, number_range, label="", source=SystemSource.MANUAL):
    return HurfordEnumerator(params).shortest_system(number_range, label, source)


def expressible(params, number_range):
    return HurfordEnumerator(params).expressible(number_range)
