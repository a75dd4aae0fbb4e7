# SPDX-License-Identifier: GPL-3.0-or-later
#
# Grundy Kit: maximizing colorings and self-stabilizing frequency assignment.
# Copyright (C) 2025 Grundy Kit contributors

"""
Brute-force oracles for small graphs.

These share no search logic with the exact solvers; they exist to
cross-check them.
"""

from functools import lru_cache
from typing import Iterator, List, Optional, Tuple
import logging

from ..errors import InvalidInputError, LimitExceededError
from ..graph import Graph
from .bounds import m_degree
from .greedy import mex
from .models import ColoringKind
from .verify import verify

logger = logging.getLogger(__name__)

DEFAULT_ORACLE_LIMIT = 8


def _check_size(g: Graph, what: str, limit: int):
    if g.vertex_count == 0:
        raise InvalidInputError(f"{what} needs at least one vertex")
    if g.vertex_count > limit:
        raise LimitExceededError(what, limit, g.vertex_count)


def grundy_permutation_oracle(g: Graph, limit: int = DEFAULT_ORACLE_LIMIT) -> int:
    """
    Largest number of colors first-fit uses over all n! vertex orders.

    Orders are walked as a prefix tree. Two prefixes that colored the same
    vertex set the same way continue identically, so their outcome is cached.
    """
    _check_size(g, "grundy permutation oracle", limit)
    n = g.vertex_count
    ceiling = g.max_degree + 1

    @lru_cache(maxsize=None)
    def best_from(colors: Tuple[int, ...]) -> int:
        # colors[v] == 0 marks a vertex not yet visited
        best = max(colors)
        for v in range(n):
            if colors[v]:
                continue
            c = mex(colors[u] for u in g.neighbors(v) if colors[u])
            extended = colors[:v] + (c,) + colors[v + 1:]
            best = max(best, best_from(extended))
            if best == ceiling:
                break
        return best

    result = best_from((0,) * n)
    logger.debug(f"🔧 Permutation oracle: Gamma = {result} ({best_from.cache_info().currsize} states)")
    return result


def _partitions(g: Graph, cap: int) -> Iterator[List[int]]:
    """Proper assignments with colors <= cap in first-occurrence form (one per color renaming)."""
    n = g.vertex_count
    colors = [0] * n

    def extend(v: int, used: int):
        if v == n:
            yield list(colors)
            return
        blocked = {colors[u] for u in g.neighbors(v) if u < v}
        for c in range(1, min(cap, used + 1) + 1):
            if c in blocked:
                continue
            colors[v] = c
            yield from extend(v + 1, max(used, c))
        colors[v] = 0

    yield from extend(0, 0)


def _best_class_order(g: Graph, colors: List[int]) -> int:
    """
    Number of classes if some renaming of the classes is a partial Grundy
    coloring, else 0.

    A set S of classes can occupy colors 1..|S| when some class in S has a
    vertex adjacent to every other class of S and the rest of S can
    occupy 1..|S|-1 in turn.
    """
    k = max(colors)
    sees = []
    for v in g.vertices:
        mask = 0
        for u in g.neighbors(v):
            mask |= 1 << (colors[u] - 1)
        sees.append(mask)
    class_sees = [[] for _ in range(k)]
    for v in g.vertices:
        class_sees[colors[v] - 1].append(sees[v])

    reachable = [False] * (1 << k)
    reachable[0] = True
    for subset in range(1, 1 << k):
        for c in range(k):
            bit = 1 << c
            if not subset & bit or not reachable[subset ^ bit]:
                continue
            below = subset ^ bit
            if any(mask & below == below for mask in class_sees[c]):
                reachable[subset] = True
                break
    return k if reachable[(1 << k) - 1] else 0


def exhaustive_assignment_oracle(
    g: Graph, kind: ColoringKind, limit: int = DEFAULT_ORACLE_LIMIT
) -> int:
    """
    Extremal number of colors over all proper assignments that pass verify().

    Colors are capped at max degree + 1 (m-degree for b_coloring). proper
    and b_coloring do not depend on color names, so one assignment per
    renaming is checked. partial_grundy does; for it every class ordering
    of each assignment is tried.
    """
    _check_size(g, f"exhaustive {kind.value} oracle", limit)
    cap = m_degree(g) if kind is ColoringKind.B_COLORING else g.max_degree + 1

    best: Optional[int] = None
    checked = 0
    for colors in _partitions(g, cap):
        checked += 1
        if kind is ColoringKind.PARTIAL_GRUNDY:
            k = _best_class_order(g, colors)
            if k:
                best = max(best or 0, k)
            continue
        if not verify(g, colors, kind).valid:
            continue
        k = max(colors)
        if kind is ColoringKind.PROPER:
            best = k if best is None else min(best, k)
        else:
            best = max(best or 0, k)

    logger.debug(f"🔧 Exhaustive {kind.value} oracle: {best} over {checked} assignments")
    if best is None:
        raise RuntimeError(f"no {kind.value} assignment found")
    return best
