import graphviz

INITIAL_LABEL = "λ"


def to_digraph(automaton, name="numerals"):
    dot = graphviz.Digraph(name=name, graph_attr={"rankdir": "LR"})
    for state in automaton.states:
        shape = "doublecircle" if automaton.is_accepting(state) else "circle"
        label = INITIAL_LABEL if state == automaton.initial else str(state)
        dot.node(str(state), label=label, shape=shape)
    for src, symbol, dst in automaton.transitions:
        dot.edge(str(src), str(dst), label=symbol)
    return dot


def export_dot(automaton, name="numerals"):
    """DOT source text; accepting states are doubly circled."""
    return to_digraph(automaton, name).source
