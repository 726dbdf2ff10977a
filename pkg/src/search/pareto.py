from dataclasses import dataclass, field
from itertools import groupby
from typing import Any

import numpy as np


@dataclass(frozen=True)
class ScoredPoint:
    x: float
    y: float
    payload: Any = field(default=None, compare=False)

    def __post_init__(self):
        if not (np.isfinite(self.x) and np.isfinite(self.y)):
            raise ValueError("Point coordinates must be finite: ({}, {})".format(self.x, self.y))

    def negated(self):
        return ScoredPoint(-self.x, -self.y, self.payload)


def dominates(a, b):
    """True if a is no worse than b on both objectives and better on one."""
    return a.x <= b.x and a.y <= b.y and (a.x < b.x or a.y < b.y)


def pareto_front(points):
    """
    Points not strictly dominated by any other point, ordered by (x, y).
    Duplicates do not dominate each other and are all kept.
    """
    ordered = sorted(points, key=lambda p: (p.x, p.y))
    front = []
    best_y = np.inf  # lowest y among strictly smaller x
    for _, group in groupby(ordered, key=lambda p: p.x):
        group = list(group)
        group_min = group[0].y
        for p in group:
            if best_y <= p.y or group_min < p.y:
                continue
            front.append(p)
        best_y = min(best_y, group_min)
    return front


def is_mutually_non_dominated(points):
    return not any(dominates(a, b) for a in points for b in points if a is not b)


def hypervolume(points, reference):
    """
    Area dominated by the points and bounded by the reference point, both
    objectives minimised. Points outside the reference box add nothing.
    """
    ref_x, ref_y = reference
    inside = [p for p in pareto_front(points) if p.x < ref_x and p.y < ref_y]
    volume = 0.0
    previous_y = ref_y
    for p in inside:
        if p.y >= previous_y:
            continue
        volume += (ref_x - p.x) * (previous_y - p.y)
        previous_y = p.y
    return float(volume)
