# SPDX-License-Identifier: GPL-3.0-or-later
#
# Grundy Kit: maximizing colorings and self-stabilizing frequency assignment.
# Copyright (C) 2025 Grundy Kit contributors

"""
Graph representation, family constructors and operators.
"""

from .core import Graph, bfs_distances, diameter
from .families import FamilySpec, build_family, family, random_graph, interval_graph
from .operators import (
    power_graph,
    cartesian_product,
    conormal_sum,
    cartesian_product_many,
    combine_many,
    get_operator,
)

__all__ = [
    'Graph',
    'bfs_distances',
    'diameter',
    'FamilySpec',
    'build_family',
    'family',
    'random_graph',
    'interval_graph',
    'power_graph',
    'cartesian_product',
    'conormal_sum',
    'cartesian_product_many',
    'combine_many',
    'get_operator',
]
