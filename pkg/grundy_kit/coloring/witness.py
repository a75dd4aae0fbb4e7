# SPDX-License-Identifier: GPL-3.0-or-later
#
# Grundy Kit: maximizing colorings and self-stabilizing frequency assignment.
# Copyright (C) 2025 Grundy Kit contributors

"""
Graphs with a prescribed Grundy number: binomial trees.
"""

from typing import List, Tuple
import logging

from ..errors import InvalidInputError, LimitExceededError
from ..graph import Graph
from .models import Coloring

logger = logging.getLogger(__name__)

DEFAULT_WITNESS_LIMIT = 16


def binomial_tree(k: int, limit: int = DEFAULT_WITNESS_LIMIT) -> Tuple[Graph, Coloring]:
    """
    Binomial tree T_k on 2^(k-1) vertices with its canonical Grundy k-coloring.

    T_1 is one vertex. T_k joins the roots of two copies of T_(k-1); the
    first copy keeps vertex ids 0.. and its root (vertex 0) becomes the root
    of T_k and takes color k, the second copy is shifted by 2^(k-2).
    """
    if k < 1:
        raise InvalidInputError(f"binomial tree order must be >= 1, got {k}")
    if k > limit:
        raise LimitExceededError("binomial tree order", limit, k)

    edges: List[Tuple[int, int]] = []
    colors = [1]
    size = 1
    for order in range(2, k + 1):
        edges += [(u + size, v + size) for u, v in edges]
        edges.append((0, size))
        colors = [order] + colors[1:] + colors
        size *= 2
    logger.debug(f"🔧 Binomial tree T_{k}: {size} vertices")
    return Graph.from_edges(size, edges), Coloring(tuple(colors))
