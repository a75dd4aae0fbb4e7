# SPDX-License-Identifier: GPL-3.0-or-later
#
# Grundy Kit: maximizing colorings and self-stabilizing frequency assignment.
# Copyright (C) 2025 Grundy Kit contributors

"""
Unit-disk interference graph over node positions.
"""

from typing import Sequence, Tuple

import numpy as np

from ..graph import Graph
from .models import NetworkState


def pairwise_distances(positions: Sequence[Tuple[float, float]]) -> np.ndarray:
    """Euclidean distance matrix of 2-D points."""
    points = np.asarray(positions, dtype=float).reshape(-1, 2)
    delta = points[:, None, :] - points[None, :, :]
    return np.sqrt((delta ** 2).sum(axis=-1))


def unit_disk_graph(positions: Sequence[Tuple[float, float]], radio_range: float) -> Graph:
    """u ~ v iff u != v and their distance is at most radio_range."""
    n = len(positions)
    if n == 0:
        return Graph.empty(0)
    within = pairwise_distances(positions) <= radio_range
    rows, cols = np.nonzero(np.triu(within, k=1))
    return Graph.from_edges(n, zip(rows.tolist(), cols.tolist()))


def interference_graph(state: NetworkState) -> Graph:
    """Interference graph of the network; vertex i is the i-th node by sorted id."""
    return unit_disk_graph([(node.x, node.y) for node in state.nodes], state.radio_range)
