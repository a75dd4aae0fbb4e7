# SPDX-License-Identifier: GPL-3.0-or-later
#
# Grundy Kit: maximizing colorings and self-stabilizing frequency assignment.
# Copyright (C) 2025 Grundy Kit contributors

"""
Seeded random scenarios: uniform positions in a square, range tuned to a target average degree.
"""

from typing import List, Optional
import logging

import numpy as np

from ..errors import InvalidInputError
from .interference import pairwise_distances
from .models import NodeRecord, RuleName, Scenario, TopologyEvent

logger = logging.getLogger(__name__)


def range_for_average_degree(distances: np.ndarray, avg_degree: float) -> float:
    """
    Smallest radius giving round(avg_degree * n / 2) interference edges.

    Ties at that distance may add a few more edges.
    """
    n = distances.shape[0]
    pair_distances = np.sort(distances[np.triu_indices(n, k=1)])
    if pair_distances.size == 0:
        return 0.0
    target = int(round(avg_degree * n / 2))
    target = max(0, min(target, pair_distances.size))
    if target == 0:
        return float(pair_distances[0]) / 2
    return float(pair_distances[target - 1])


def random_scenario(
    n: int,
    seed: int = 0,
    avg_degree: float = 4.0,
    side: float = 100.0,
    rule: RuleName = "strict_mex",
    max_rounds: int = 500,
    events: Optional[List[TopologyEvent]] = None,
) -> Scenario:
    """
    Random network with arbitrary initial channels in 1..n.

    Args:
        n: Node count (ids 0..n-1)
        seed: Drives positions and channels
        avg_degree: Target average interference degree
        side: Side of the square deployment area in meters
    """
    if n < 1:
        raise InvalidInputError(f"scenario needs at least one node, got n={n}")
    if avg_degree < 0 or side <= 0:
        raise InvalidInputError("avg_degree must be >= 0 and side > 0")

    rng = np.random.default_rng(seed)
    positions = rng.uniform(0.0, side, size=(n, 2))
    channels = rng.integers(1, n, size=n, endpoint=True)
    radio_range = range_for_average_degree(pairwise_distances(positions), avg_degree)
    logger.debug(f"🔧 Scenario n={n} seed={seed}: range {radio_range:.3f} m for average degree {avg_degree}")

    nodes = [
        NodeRecord(id=i, x=float(x), y=float(y), channel=int(c))
        for i, ((x, y), c) in enumerate(zip(positions, channels))
    ]
    return Scenario(
        radio_range=radio_range,
        rule=rule,
        max_rounds=max_rounds,
        seed=seed,
        nodes=nodes,
        events=events or [],
    )
