"""
Trie construction followed by Hopcroft partition refinement.

Slower than the incremental builder but independent of it; both must agree
up to isomorphism on every finite language.
"""

from collections import defaultdict

from automaton.automaton import freeze
from model.morpheme import word_sort_key


class _Block:
    __slots__ = ("final", "edges")

    def __init__(self, final):
        self.final = final
        self.edges = {}


def build_trie(words):
    """Returns (edges, finals): per-state symbol maps and the final states."""
    edges = [dict()]
    finals = set()
    for word in words:
        state = 0
        for symbol in word:
            if symbol not in edges[state]:
                edges.append(dict())
                edges[state][symbol] = len(edges) - 1
            state = edges[state][symbol]
        finals.add(state)
    return edges, finals


def hopcroft_partition(edges, finals, alphabet):
    """
    Myhill-Nerode classes of a complete DFA given as per-state symbol maps
    over the full alphabet. Returns a list mapping each state to its block.
    """
    state_count = len(edges)
    inverse = defaultdict(set)
    for src, out in enumerate(edges):
        for symbol, dst in out.items():
            inverse[(dst, symbol)].add(src)

    accepting = frozenset(finals)
    rejecting = frozenset(range(state_count)) - accepting
    partition = [block for block in (accepting, rejecting) if block]
    worklist = [min(partition, key=len)] if len(partition) == 2 else list(partition)

    while worklist:
        splitter = worklist.pop()
        for symbol in alphabet:
            predecessors = set()
            for state in splitter:
                predecessors |= inverse.get((state, symbol), set())
            if not predecessors:
                continue

            refined = []
            for block in partition:
                inside = block & predecessors
                outside = block - predecessors
                if inside and outside:
                    refined.extend((inside, outside))
                    if block in worklist:
                        worklist.remove(block)
                        worklist.extend((inside, outside))
                    else:
                        worklist.append(min(inside, outside, key=len))
                else:
                    refined.append(block)
            partition = refined

    block_of = [0] * state_count
    for index, block in enumerate(partition):
        for state in block:
            block_of[state] = index
    return block_of


def build_trie_minimized(words):
    words = sorted(set(tuple(w) for w in words), key=word_sort_key)
    if not words:
        raise ValueError("Cannot build an automaton for an empty language")

    edges, finals = build_trie(words)
    alphabet = sorted({symbol for word in words for symbol in word})

    # complete the trie with a sink so the partition is over a total DFA
    sink = len(edges)
    complete = [dict(out) for out in edges] + [dict()]
    for out in complete:
        for symbol in alphabet:
            out.setdefault(symbol, sink)

    block_of = hopcroft_partition(complete, finals, alphabet)
    dead = block_of[sink]

    blocks = {}
    for state in range(len(complete)):
        index = block_of[state]
        if index != dead and index not in blocks:
            blocks[index] = _Block(state in finals)
    for state, out in enumerate(complete):
        index = block_of[state]
        if index == dead:
            continue
        for symbol, dst in out.items():
            if block_of[dst] != dead:
                blocks[index].edges[symbol] = blocks[block_of[dst]]

    automaton = freeze(blocks[block_of[0]], lambda b: b.final, lambda b: b.edges)
    automaton.check_invariants()
    return automaton
