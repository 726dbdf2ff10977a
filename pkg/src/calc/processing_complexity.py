import numpy as np

from log_config import main_logger

logger = main_logger.getChild("measures")


def path_cost(automaton, trace):
    """
    Bits to follow a parse: log2 of the out-degree at every branching point
    plus one bit for each accepting state passed through, final one included.
    """
    choice_bits = sum(np.log2(automaton.out_degree(src)) for src, _, _ in trace.transitions)
    return float(choice_bits) + sum(trace.accept_flags)


def word_costs(automaton, words_by_number):
    return {
        n: path_cost(automaton, automaton.parse(tokens))
        for n, tokens in words_by_number.items()
    }


def weighted_processing_bits(automaton, words_by_number, weights):
    """
    Weighted path cost over the given numbers. Weights are used as given,
    so a subset of a prior yields a partial sum.
    """
    costs = word_costs(automaton, words_by_number)
    return float(sum(weights[n] * cost for n, cost in costs.items()))


def processing_complexity(system, automaton, prior):
    return weighted_processing_bits(
        automaton, system.tokens_by_number(), prior.as_dict()
    )
