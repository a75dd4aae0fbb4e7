# SPDX-License-Identifier: GPL-3.0-or-later
#
# Grundy Kit: maximizing colorings and self-stabilizing frequency assignment.
# Copyright (C) 2025 Grundy Kit contributors

"""
First-fit (greedy) coloring.
"""

from typing import Iterable, List, Optional, Sequence, Union
import logging

from ..errors import InvalidInputError
from ..graph import Graph
from .models import Coloring, VertexOrder

logger = logging.getLogger(__name__)


def mex(colors: Iterable[int]) -> int:
    """Smallest positive integer absent from colors (mex of the empty set is 1)."""
    taken = set(colors)
    candidate = 1
    while candidate in taken:
        candidate += 1
    return candidate


def first_fit(g: Graph, order: Union[VertexOrder, Sequence[int], None] = None) -> Coloring:
    """
    Color vertices in the given order, each with the mex of its colored neighbors.

    Args:
        g: Graph to color
        order: Visiting order (defaults to vertex id order)

    Returns:
        A proper coloring where every vertex colored c sees 1..c-1 among earlier neighbors
    """
    if order is None:
        order = VertexOrder.identity(g.vertex_count)
    elif not isinstance(order, VertexOrder):
        order = VertexOrder(tuple(order))
    if len(order) != g.vertex_count:
        raise InvalidInputError(f"order has {len(order)} vertices, graph has {g.vertex_count}")

    colors: List[Optional[int]] = [None] * g.vertex_count
    for v in order:
        colors[v] = mex(colors[u] for u in g.neighbors(v) if colors[u] is not None)
    return Coloring(tuple(colors))
