"""
Incremental construction of the minimal acyclic DFA from a sorted word list.

Words are added in lexicographic order (number atoms by value, see
``token_sort_key``). After each insertion only the path of the previous
word can still change, so every state hanging off the common prefix is
final: it is either merged with an equivalent registered state or
registered itself. At the end the whole path from the root is processed
and the result is minimal.
"""

from automaton.automaton import freeze
from log_config import main_logger
from model.morpheme import word_sort_key

logger = main_logger.getChild("dfa")


class _State:
    __slots__ = ("final", "edges", "last_symbol")

    def __init__(self):
        self.final = False
        self.edges = {}
        self.last_symbol = None

    def signature(self):
        # children are registered already, so their identity is their class
        return self.final, tuple(
            (symbol, id(child)) for symbol, child in sorted(self.edges.items())
        )


class MinimalDfaBuilder:
    def __init__(self):
        self.root = _State()
        self.register = {}
        self.previous = None

    def add_word(self, word):
        word = tuple(word)
        if self.previous is not None and word_sort_key(word) <= word_sort_key(
            self.previous
        ):
            raise ValueError(
                "Words must be added in strictly increasing order: {} after {}".format(
                    " ".join(word), " ".join(self.previous)
                )
            )

        prefix_len, last_state = self._common_prefix(word)
        if last_state.edges:
            self._replace_or_register(last_state)
        self._add_suffix(last_state, word[prefix_len:])
        self.previous = word

    def finish(self):
        if self.root.edges:
            self._replace_or_register(self.root)
        automaton = freeze(self.root, lambda s: s.final, lambda s: s.edges)
        automaton.check_invariants()
        return automaton

    def _common_prefix(self, word):
        state = self.root
        i = 0
        while i < len(word) and word[i] in state.edges:
            state = state.edges[word[i]]
            i += 1
        return i, state

    def _add_suffix(self, state, suffix):
        for symbol in suffix:
            child = _State()
            state.edges[symbol] = child
            state.last_symbol = symbol
            state = child
        state.final = True

    def _replace_or_register(self, state):
        symbol = state.last_symbol
        child = state.edges[symbol]
        if child.edges:
            self._replace_or_register(child)

        signature = child.signature()
        existing = self.register.get(signature)
        if existing is not None:
            state.edges[symbol] = existing
        else:
            self.register[signature] = child


def build_from_words(words):
    words = sorted(set(tuple(w) for w in words), key=word_sort_key)
    if not words:
        raise ValueError("Cannot build an automaton for an empty language")

    builder = MinimalDfaBuilder()
    for word in words:
        builder.add_word(word)
    automaton = builder.finish()
    logger.debug("Built {} from {} words".format(automaton, len(words)))
    return automaton


def build_minimal_dfa(system):
    """Minimal partial DFA accepting exactly the numerals of a system."""
    return build_from_words(system.words())
