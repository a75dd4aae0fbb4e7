# SPDX-License-Identifier: GPL-3.0-or-later
#
# Grundy Kit: maximizing colorings and self-stabilizing frequency assignment.
# Copyright (C) 2025 Grundy Kit contributors

"""
Canonical graph families and seeded random generators.
"""

from itertools import combinations
from typing import List, Literal, Optional, Sequence
import logging

import numpy as np
from pydantic import BaseModel, Field, model_validator

from ..errors import InvalidInputError
from .core import Graph

logger = logging.getLogger(__name__)

FamilyName = Literal["empty", "path", "cycle", "complete", "star", "complete_bipartite", "kary_tree"]

# Positional CLI parameters per family
FAMILY_PARAMETERS = {
    "empty": ("n",),
    "path": ("n",),
    "cycle": ("n",),
    "complete": ("n",),
    "star": ("n",),
    "complete_bipartite": ("m", "n"),
    "kary_tree": ("arity", "depth"),
}


class FamilySpec(BaseModel):
    """Family name plus its integer parameters"""
    family: FamilyName
    n: Optional[int] = Field(default=None, description="Vertex count (leaf count for star, second side for complete_bipartite)")
    m: Optional[int] = Field(default=None, description="First side of complete_bipartite")
    arity: Optional[int] = Field(default=None, description="Children per internal node of kary_tree")
    depth: Optional[int] = Field(default=None, description="Depth of kary_tree (root alone has depth 0)")

    @model_validator(mode="after")
    def validate_parameter_bounds(self):
        family = self.family
        if family in ("empty", "path", "complete", "star"):
            if self.n is None or self.n < 1:
                raise ValueError(f"{family} requires n >= 1, got n={self.n}")
        elif family == "cycle":
            if self.n is None or self.n < 3:
                raise ValueError(f"cycle requires n >= 3, got n={self.n}")
        elif family == "complete_bipartite":
            if self.m is None or self.m < 1 or self.n is None or self.n < 1:
                raise ValueError(f"complete_bipartite requires m >= 1 and n >= 1, got m={self.m}, n={self.n}")
        elif family == "kary_tree":
            if self.arity is None or self.arity < 1:
                raise ValueError(f"kary_tree requires arity >= 1, got arity={self.arity}")
            if self.depth is None or self.depth < 0:
                raise ValueError(f"kary_tree requires depth >= 0, got depth={self.depth}")
        return self

    @classmethod
    def from_params(cls, family: str, params: Sequence[int]) -> "FamilySpec":
        """Build a spec from positional parameters as given on the command line."""
        names = FAMILY_PARAMETERS.get(family)
        if names is None:
            raise InvalidInputError(
                f"unknown family '{family}', expected one of: {', '.join(FAMILY_PARAMETERS)}"
            )
        if len(params) != len(names):
            raise InvalidInputError(f"{family} takes parameters {' '.join(names)}, got {len(params)} values")
        return cls(family=family, **dict(zip(names, params)))


def build_family(spec: FamilySpec) -> Graph:
    """Canonical labeled member of a family."""
    family = spec.family
    if family == "empty":
        return Graph.empty(spec.n)
    if family == "path":
        return Graph.from_edges(spec.n, ((i, i + 1) for i in range(spec.n - 1)))
    if family == "cycle":
        return Graph.from_edges(spec.n, ((i, (i + 1) % spec.n) for i in range(spec.n)))
    if family == "complete":
        return Graph.from_edges(spec.n, combinations(range(spec.n), 2))
    if family == "star":
        return Graph.from_edges(spec.n + 1, ((0, leaf) for leaf in range(1, spec.n + 1)))
    if family == "complete_bipartite":
        m, n = spec.m, spec.n
        return Graph.from_edges(m + n, ((u, v) for u in range(m) for v in range(m, m + n)))
    # kary_tree, numbered in level order with root 0
    a, d = spec.arity, spec.depth
    vertex_count = sum(a ** level for level in range(d + 1))
    edges = [(v, a * v + j) for v in range(vertex_count) for j in range(1, a + 1) if a * v + j < vertex_count]
    return Graph.from_edges(vertex_count, edges)


def family(name: str, *params: int) -> Graph:
    """Shorthand: family('cycle', 5) builds C_5."""
    return build_family(FamilySpec.from_params(name, list(params)))


def random_graph(n: int, p: float, seed: int) -> Graph:
    """
    Erdős–Rényi G(n, p).

    One uniform draw per vertex pair, pairs enumerated lexicographically,
    so a fixed seed always yields the same graph.
    """
    if n < 0:
        raise InvalidInputError(f"vertex count must be non-negative, got {n}")
    if not 0.0 <= p <= 1.0:
        raise InvalidInputError(f"edge probability must lie in [0, 1], got {p}")
    pairs = list(combinations(range(n), 2))
    draws = np.random.default_rng(seed).random(len(pairs))
    return Graph.from_edges(n, (pair for pair, r in zip(pairs, draws) if r < p))


def interval_graph(n: int, seed: int) -> Graph:
    """Intersection graph of n closed intervals with endpoints uniform in [0, 1]."""
    if n < 1:
        raise InvalidInputError(f"interval graph requires n >= 1, got {n}")
    endpoints = np.sort(np.random.default_rng(seed).random((n, 2)), axis=1)
    edges: List = []
    for u, v in combinations(range(n), 2):
        if endpoints[u, 0] <= endpoints[v, 1] and endpoints[v, 0] <= endpoints[u, 1]:
            edges.append((u, v))
    logger.debug(f"🔧 Interval graph: {n} intervals, {len(edges)} overlaps (seed={seed})")
    return Graph.from_edges(n, edges)
