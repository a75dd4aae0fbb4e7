# SPDX-License-Identifier: GPL-3.0-or-later
#
# Grundy Kit: maximizing colorings and self-stabilizing frequency assignment.
# Copyright (C) 2025 Grundy Kit contributors

"""
Graph operators: powers and the two readings of the "cartesian sum".

Product vertices are pairs (u, v) flattened row-major as u * |V(h)| + v.
"""

from functools import reduce
from typing import Callable, Dict, Sequence
import logging

import networkx as nx

from ..errors import InvalidInputError
from .core import Graph

logger = logging.getLogger(__name__)


def power_graph(g: Graph, k: int) -> Graph:
    """G^k: join every pair at hop distance 1..k; unreachable pairs stay apart."""
    if k < 1:
        raise InvalidInputError(f"power must be >= 1, got {k}")
    if k == 1:
        return g
    return Graph.from_networkx(nx.power(g.to_networkx(), k))


def _require_factors(g: Graph, h: Graph, name: str):
    if g.vertex_count == 0 or h.vertex_count == 0:
        raise InvalidInputError(f"{name} needs two non-empty graphs")


def _flatten(pairs: nx.Graph, width: int) -> Graph:
    """Relabel (u, v) product nodes to u * width + v."""
    flat = nx.relabel_nodes(pairs, {(u, v): u * width + v for u, v in pairs.nodes()})
    return Graph.from_networkx(flat)


def cartesian_product(g: Graph, h: Graph) -> Graph:
    """G □ H: equal in one coordinate and adjacent in the other."""
    _require_factors(g, h, "cartesian_product")
    return _flatten(nx.cartesian_product(g.to_networkx(), h.to_networkx()), h.vertex_count)


def conormal_sum(g: Graph, h: Graph) -> Graph:
    """G ⊕ H (co-normal product): adjacent in either coordinate."""
    _require_factors(g, h, "conormal_sum")
    # complement of the strong product of the complements
    strong = nx.strong_product(nx.complement(g.to_networkx()), nx.complement(h.to_networkx()))
    return _flatten(nx.complement(strong), h.vertex_count)


OPERATORS: Dict[str, Callable[[Graph, Graph], Graph]] = {
    "product": cartesian_product,
    "conormal": conormal_sum,
}


def get_operator(name: str) -> Callable[[Graph, Graph], Graph]:
    operator = OPERATORS.get(name)
    if operator is None:
        raise InvalidInputError(f"unknown operator '{name}', expected one of: {', '.join(OPERATORS)}")
    return operator


def combine_many(graphs: Sequence[Graph], operator: str = "product") -> Graph:
    """Fold a binary operator left to right over several factors."""
    if not graphs:
        raise InvalidInputError("at least one graph is required")
    result = reduce(get_operator(operator), graphs)
    logger.debug(f"🔧 Combined {len(graphs)} factors with '{operator}': {result.vertex_count} vertices, {result.edge_count} edges")
    return result


def cartesian_product_many(graphs: Sequence[Graph]) -> Graph:
    return combine_many(graphs, "product")
