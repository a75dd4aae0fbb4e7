# SPDX-License-Identifier: GPL-3.0-or-later
#
# Grundy Kit: maximizing colorings and self-stabilizing frequency assignment.
# Copyright (C) 2025 Grundy Kit contributors

"""
Degree and clique bounds for the coloring parameters.
"""

from typing import List
import logging

from ..errors import InvalidInputError
from ..graph import Graph
from .models import BoundsReport

logger = logging.getLogger(__name__)


def m_degree(g: Graph) -> int:
    """Largest i such that at least i vertices have degree >= i-1 (upper bound for b)."""
    best = 0
    for i, d in enumerate(sorted(g.degrees(), reverse=True), start=1):
        if d >= i - 1:
            best = i
        else:
            break
    return best


def partial_grundy_bound(g: Graph) -> int:
    """
    Largest k such that the j-th largest degree is at least k-j for j = 1..k.

    Witnesses of classes i..k are distinct vertices of degree >= i-1, so
    no partial Grundy coloring uses more colors.
    """
    degrees = sorted(g.degrees(), reverse=True)
    best = 0
    for k in range(1, len(degrees) + 1):
        if all(degrees[j - 1] >= k - j for j in range(1, k + 1)):
            best = k
    return best


def second_degree(g: Graph) -> int:
    """Max over edges uv of min(deg u, deg v); 0 on edgeless graphs."""
    return max((min(g.degree(u), g.degree(v)) for u, v in g.edges()), default=0)


def greedy_clique(g: Graph) -> List[int]:
    """Maximal clique grown from the max-degree vertex, heavier neighbors first."""
    if g.vertex_count == 0:
        return []
    start = max(g.vertices, key=lambda v: (g.degree(v), -v))
    clique = [start]
    for v in sorted(g.neighbors(start), key=lambda u: (-g.degree(u), u)):
        if all(g.has_edge(v, member) for member in clique):
            clique.append(v)
    return sorted(clique)


def parameter_bounds(g: Graph) -> BoundsReport:
    """
    Bounds used throughout the engine.

    chi >= clique_lower; Gamma <= second_degree_plus_one <= max_degree_plus_one;
    partial Grundy <= partial_grundy_upper <= max_degree_plus_one; b <= m_degree.
    """
    if g.vertex_count == 0:
        raise InvalidInputError("bounds need a non-empty graph")
    clique = greedy_clique(g)
    report = BoundsReport(
        max_degree_plus_one=g.max_degree + 1,
        clique_lower=len(clique),
        m_degree=m_degree(g),
        second_degree_plus_one=second_degree(g) + 1,
        partial_grundy_upper=partial_grundy_bound(g),
        clique=clique,
    )
    logger.debug(f"🔧 Bounds: {report.to_dict()}")
    return report
