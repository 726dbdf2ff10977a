import numpy as np


def irregularity_from_sizes(transitions, states, alphabet):
    """
    Bits to encode a DFA: every transition names a source, a target and a
    symbol, then the initial state and one accepting flag per state.
    """
    states = float(states)
    return float(
        transitions * (2 * np.log2(states) + np.log2(alphabet))
        + np.log2(states)
        + states
    )


def irregularity(automaton):
    if automaton.transition_count == 0:
        raise ValueError("Irregularity is undefined for an empty automaton")
    return irregularity_from_sizes(
        automaton.transition_count, automaton.state_count, len(automaton.alphabet)
    )
