from model.grammar_params import GrammarParams


def morph_complexity(expr):
    """Number atoms plus combinators; parentheses are not morphemes."""
    return expr.morpheme_count


def lexicon_size(source):
    if isinstance(source, GrammarParams):
        return source.lexicon_size
    return len(source.atom_values())


def weighted_morph_complexity(lengths, weights):
    return float(sum(weights[n] * length for n, length in lengths.items()))


def avg_morph_complexity(system, prior):
    return weighted_morph_complexity(system.lengths(), prior.as_dict())
