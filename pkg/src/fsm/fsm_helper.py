from enum import Enum


def to_name(state):
    return state.name if isinstance(state, Enum) else state


def to_list(item):
    if isinstance(item, (set, frozenset, tuple)):
        return sorted(item, key=str)
    if isinstance(item, list):
        return item
    return [item]
