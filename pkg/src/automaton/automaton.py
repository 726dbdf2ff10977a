import json
from collections import deque
from dataclasses import dataclass
from types import MappingProxyType
from typing import Tuple

from exception.automaton import NotAcceptedException
from model.morpheme import token_sort_key


@dataclass(frozen=True)
class ParseTrace:
    state_sequence: Tuple[int, ...]
    transitions: Tuple[Tuple[int, str, int], ...]
    accept_flags: Tuple[bool, ...]

    def __post_init__(self):
        assert len(self.state_sequence) == len(self.transitions) + 1
        assert len(self.accept_flags) == len(self.state_sequence)
        assert self.accept_flags[-1], "trace must end in an accepting state"


class Automaton:
    """
    Immutable partial DFA with integer states. State 0 is the initial state
    and ids follow a topological order, so every transition goes from a
    lower to a higher id.
    """

    def __init__(self, state_count, accepting, transitions):
        delta = [dict() for _ in range(state_count)]
        for src, symbol, dst in transitions:
            if symbol in delta[src]:
                raise ValueError(
                    "Non-deterministic transition from {} on '{}'".format(src, symbol)
                )
            delta[src][symbol] = dst

        self.__state_count = state_count
        self.__accepting = frozenset(accepting)
        self.__delta = tuple(MappingProxyType(d) for d in delta)
        self.__transitions = tuple(
            sorted(
                ((s, a, t) for s, a, t in transitions),
                key=lambda z: (z[0], token_sort_key(z[1])),
            )
        )
        self.__alphabet = frozenset(a for _, a, _ in self.__transitions)

    @property
    def initial(self):
        return 0

    @property
    def states(self):
        return range(self.__state_count)

    @property
    def state_count(self):
        return self.__state_count

    @property
    def accepting(self):
        return self.__accepting

    @property
    def transitions(self):
        return self.__transitions

    @property
    def transition_count(self):
        return len(self.__transitions)

    @property
    def alphabet(self):
        return self.__alphabet

    def out_degree(self, state):
        return len(self.__delta[state])

    def out_edges(self, state):
        return self.__delta[state]

    def is_accepting(self, state):
        return state in self.__accepting

    def step(self, state, symbol):
        return self.__delta[state].get(symbol)

    def parse(self, tokens):
        tokens = tuple(tokens)
        state = self.initial
        states = [state]
        taken = []
        for symbol in tokens:
            nxt = self.step(state, symbol)
            if nxt is None:
                raise NotAcceptedException(tokens)
            taken.append((state, symbol, nxt))
            state = nxt
            states.append(state)
        if not self.is_accepting(state):
            raise NotAcceptedException(tokens)
        return ParseTrace(
            tuple(states), tuple(taken), tuple(self.is_accepting(s) for s in states)
        )

    def accepts(self, tokens):
        try:
            self.parse(tokens)
        except NotAcceptedException:
            return False
        return True

    def words(self):
        """The accepted language, in symbol order."""
        found = []

        def walk(state, prefix):
            if self.is_accepting(state):
                found.append(prefix)
            for symbol in sorted(self.__delta[state], key=token_sort_key):
                walk(self.__delta[state][symbol], prefix + (symbol,))

        walk(self.initial, ())
        return found

    def check_invariants(self):
        """Determinism holds by construction; asserts acyclicity and trimness."""
        for src, _, dst in self.__transitions:
            assert src < dst, "transition {} -> {} breaks topological order".format(
                src, dst
            )
        useful = set(self.__accepting)
        for state in reversed(self.states):
            if any(t in useful for t in self.__delta[state].values()):
                useful.add(state)
        assert useful == set(self.states), "states {} cannot reach acceptance".format(
            sorted(set(self.states) - useful)
        )

    def to_dict(self):
        return {
            "states": self.__state_count,
            "initial": self.initial,
            "accepting": sorted(self.__accepting),
            "transitions": [list(z) for z in self.__transitions],
        }

    def to_json(self):
        return json.dumps(self.to_dict(), indent=1)

    def is_isomorphic(self, other):
        if (
            self.state_count != other.state_count
            or self.transition_count != other.transition_count
            or self.alphabet != other.alphabet
        ):
            return False

        mapping = {self.initial: other.initial}
        queue = deque([self.initial])
        while queue:
            state = queue.popleft()
            image = mapping[state]
            if self.is_accepting(state) != other.is_accepting(image):
                return False
            mine, theirs = self.out_edges(state), other.out_edges(image)
            if set(mine) != set(theirs):
                return False
            for symbol, target in mine.items():
                if target in mapping:
                    if mapping[target] != theirs[symbol]:
                        return False
                else:
                    mapping[target] = theirs[symbol]
                    queue.append(target)
        return len(set(mapping.values())) == len(mapping) == self.state_count

    def __repr__(self):
        return "Automaton(|S|={}, |Z|={}, |Sigma|={}, accepting={})".format(
            self.state_count,
            self.transition_count,
            len(self.alphabet),
            len(self.__accepting),
        )


def freeze(initial, is_final, edges_of):
    """
    Numbers the states reachable from initial in topological order and
    returns the Automaton. is_final(state) and edges_of(state) -> {symbol:
    state} describe the mutable graph being frozen.
    """
    order = []
    seen = set()

    # iterative post-order DFS, children visited in symbol order
    stack = [(initial, False)]
    while stack:
        node, expanded = stack.pop()
        if expanded:
            order.append(node)
            continue
        if id(node) in seen:
            continue
        seen.add(id(node))
        stack.append((node, True))
        children = sorted(edges_of(node).items(), key=lambda e: token_sort_key(e[0]))
        for _, child in reversed(children):
            if id(child) not in seen:
                stack.append((child, False))

    order.reverse()
    ids = {id(node): i for i, node in enumerate(order)}
    accepting = [ids[id(node)] for node in order if is_final(node)]
    transitions = [
        (ids[id(node)], symbol, ids[id(child)])
        for node in order
        for symbol, child in edges_of(node).items()
    ]
    return Automaton(len(order), accepting, transitions)
