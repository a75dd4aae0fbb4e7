# SPDX-License-Identifier: GPL-3.0-or-later
#
# Grundy Kit: maximizing colorings and self-stabilizing frequency assignment.
# Copyright (C) 2025 Grundy Kit contributors

"""
Exact coloring parameters by backtracking.

The maximizing kinds first decide whether a target k is reachable with a
search over vertices in degeneracy order (densest core first). A hit is
then re-minimized vertex by vertex in id order, so the certificate
returned is the lexicographically smallest one for k. The chromatic
search runs directly in id order with colors in restricted-growth form.
Pruning rules only cut branches that provably cannot be completed, and
every accepted leaf is re-checked with verify().
"""

from abc import ABC, abstractmethod
from typing import Dict, Iterable, List, Mapping, Optional, Sequence, Tuple
import logging

import networkx as nx

from ..errors import InvalidInputError, LimitExceededError
from ..graph import Graph
from .bounds import m_degree, parameter_bounds
from .models import Coloring, ColoringKind
from .verify import verify

logger = logging.getLogger(__name__)

DEFAULT_LIMIT = 16
DEFAULT_SEARCH_LIMIT = 12


class BaseKindSearch(ABC):
    """
    Depth-first search for a coloring of one kind using exactly k colors.

    Vertices are assigned along `order`; vertices in `fixed` only accept
    their prescribed color. Uncolored vertices hold 0. Subclasses supply
    the candidate colors for a vertex and the pruning test run after each
    assignment.
    """

    kind: ColoringKind

    def __init__(
        self,
        g: Graph,
        k: int,
        order: Optional[Sequence[int]] = None,
        fixed: Optional[Mapping[int, int]] = None,
    ):
        self.g = g
        self.k = k
        self.n = g.vertex_count
        self.order = list(order) if order is not None else list(g.vertices)
        self.fixed = dict(fixed or {})
        self.colors: List[int] = [0] * self.n
        self.nodes = 0
        rank = [0] * self.n
        for step, v in enumerate(self.order):
            rank[v] = step
        self.earlier = [[u for u in g.neighbors(v) if rank[u] < rank[v]] for v in g.vertices]
        # future_degrees[step]: degrees of order[step:], largest first
        self.future_degrees = [
            sorted((g.degree(v) for v in self.order[step:]), reverse=True)
            for step in range(self.n + 1)
        ]

    def remaining(self, u: int) -> int:
        """Neighbors of u still uncolored"""
        return sum(1 for w in self.g.neighbors(u) if self.colors[w] == 0)

    def missing(self, u: int, wanted: Iterable[int]) -> int:
        """How many wanted colors the colored neighborhood of u still lacks"""
        seen = {self.colors[w] for w in self.g.neighbors(u)}
        return sum(1 for j in wanted if j not in seen)

    def blocked(self, v: int) -> set:
        return {self.colors[u] for u in self.earlier[v]}

    def future_max_degree(self, step: int) -> int:
        future = self.future_degrees[step + 1]
        return future[0] if future else -1

    @abstractmethod
    def candidates(self, v: int) -> Iterable[int]:
        """Colors to try for vertex v, in increasing order"""
        pass

    @abstractmethod
    def consistent(self, v: int, step: int) -> bool:
        """False when the partial assignment of order[0..step] cannot be completed"""
        pass

    def search(self) -> Optional[Tuple[int, ...]]:
        if self._extend(0):
            return tuple(self.colors)
        return None

    def _choices(self, v: int) -> Iterable[int]:
        choices = self.candidates(v)
        if v in self.fixed:
            return [self.fixed[v]] if self.fixed[v] in choices else []
        return choices

    def _extend(self, step: int) -> bool:
        if step == self.n:
            return self.k == max(self.colors, default=0) and verify(self.g, self.colors, self.kind).valid
        v = self.order[step]
        for c in self._choices(v):
            self.colors[v] = c
            self.nodes += 1
            if self.consistent(v, step) and self._extend(step + 1):
                return True
        self.colors[v] = 0
        return False


class ProperSearch(BaseKindSearch):
    """Proper colorings in restricted-growth form (first use of color c follows c-1)"""

    kind = ColoringKind.PROPER

    def candidates(self, v: int) -> Iterable[int]:
        blocked = self.blocked(v)
        ceiling = self.k if self.fixed else min(self.k, max(self.colors) + 1)
        return [c for c in range(1, ceiling + 1) if c not in blocked]

    def consistent(self, v: int, step: int) -> bool:
        # every color still unused needs a vertex of its own
        used = len({c for c in self.colors if c})
        return self.k - used <= self.n - step - 1


class GrundySearch(BaseKindSearch):
    """Every vertex colored c must end up with neighbors of all colors below c"""

    kind = ColoringKind.GRUNDY

    def candidates(self, v: int) -> Iterable[int]:
        blocked = self.blocked(v)
        ceiling = min(self.k, self.g.degree(v) + 1)
        return [c for c in range(1, ceiling + 1) if c not in blocked]

    def _settled(self, u: int) -> bool:
        return self.missing(u, range(1, self.colors[u])) <= self.remaining(u)

    def consistent(self, v: int, step: int) -> bool:
        if not self._settled(v):
            return False
        for u in self.earlier[v]:
            if not self._settled(u):
                return False
        if self.k not in self.colors and self.future_max_degree(step) < self.k - 1:
            return False
        return True


class _ClassWitnessSearch(BaseKindSearch):
    """Shared pruning for kinds that need one witness vertex per class"""

    def candidates(self, v: int) -> Iterable[int]:
        blocked = self.blocked(v)
        return [c for c in range(1, self.k + 1) if c not in blocked]

    @abstractmethod
    def wanted(self, i: int) -> range:
        """Colors a witness of class i must see"""
        pass

    def witness_degree(self, i: int) -> int:
        return len(self.wanted(i)) - (1 if i in self.wanted(i) else 0)

    def can_witness(self, u: int, i: int) -> bool:
        return self.missing(u, (j for j in self.wanted(i) if j != i)) <= self.remaining(u)

    def consistent(self, v: int, step: int) -> bool:
        colored = self.order[: step + 1]
        needed = []
        for i in range(1, self.k + 1):
            if any(self.colors[u] == i and self.can_witness(u, i) for u in colored):
                continue
            needed.append(self.witness_degree(i))
        # classes without a live witness need distinct uncolored vertices of enough degree
        future = self.future_degrees[step + 1]
        if len(needed) > len(future):
            return False
        needed.sort(reverse=True)
        return all(d >= need for d, need in zip(future, needed))


class PartialGrundySearch(_ClassWitnessSearch):
    kind = ColoringKind.PARTIAL_GRUNDY

    def wanted(self, i: int) -> range:
        return range(1, i)


class BColoringSearch(_ClassWitnessSearch):
    kind = ColoringKind.B_COLORING

    def wanted(self, i: int) -> range:
        return range(1, self.k + 1)


SEARCHES: Dict[ColoringKind, type] = {
    ColoringKind.PROPER: ProperSearch,
    ColoringKind.GRUNDY: GrundySearch,
    ColoringKind.PARTIAL_GRUNDY: PartialGrundySearch,
    ColoringKind.B_COLORING: BColoringSearch,
}


def default_limit(kind: ColoringKind) -> int:
    if kind in (ColoringKind.PARTIAL_GRUNDY, ColoringKind.B_COLORING):
        return DEFAULT_SEARCH_LIMIT
    return DEFAULT_LIMIT


def degeneracy_order(g: Graph) -> List[int]:
    """Smallest-last order: the vertex removed last from the min-degree peeling comes first."""
    return list(nx.algorithms.coloring.strategy_smallest_last(g.to_networkx(), None))


def prefix_order(g: Graph, prefix: Sequence[int], base: Sequence[int]) -> List[int]:
    """
    prefix first, then repeatedly the vertex with most neighbors already
    placed (ties by position in base), so constraints on fixed vertices
    are checked as early as possible.
    """
    placed = list(prefix)
    seen = set(placed)
    position = {v: i for i, v in enumerate(base)}
    links = [sum(1 for u in g.neighbors(v) if u in seen) for v in g.vertices]
    while len(placed) < g.vertex_count:
        v = max((u for u in base if u not in seen), key=lambda u: (links[u], -position[u]))
        placed.append(v)
        seen.add(v)
        for u in g.neighbors(v):
            links[u] += 1
    return placed


def _run_search(g: Graph, kind: ColoringKind, k: int, order: Sequence[int], fixed: Mapping[int, int]) -> Optional[Tuple[int, ...]]:
    search = SEARCHES[kind](g, k, order=order, fixed=fixed)
    found = search.search()
    logger.debug(f"🔧 {kind.value} k={k} fixed={len(fixed)}: {'found' if found else 'none'} after {search.nodes} nodes")
    return found


def _minimize(g: Graph, kind: ColoringKind, k: int, found: Tuple[int, ...], base: Sequence[int]) -> Tuple[int, ...]:
    """Lower each vertex's color in id order while a completion still exists."""
    best = list(found)
    for v in g.vertices:
        prefix = list(range(v + 1))
        order = prefix_order(g, prefix, base)
        for c in range(1, best[v]):
            fixed = {u: best[u] for u in range(v)}
            fixed[v] = c
            better = _run_search(g, kind, k, order, fixed)
            if better is not None:
                best = list(better)
                break
    return tuple(best)


def find_coloring(g: Graph, kind: ColoringKind, k: int) -> Optional[Coloring]:
    """Lexicographically smallest coloring of the kind using exactly colors 1..k, if any."""
    if kind is ColoringKind.PROPER:
        found = _run_search(g, kind, k, list(g.vertices), {})
        return Coloring(found) if found is not None else None

    base = degeneracy_order(g)
    found = _run_search(g, kind, k, base, {})
    if found is None:
        return None
    return Coloring(_minimize(g, kind, k, found, base))


def exact_parameter(g: Graph, kind: ColoringKind, limit: Optional[int] = None) -> Tuple[int, Coloring]:
    """
    Exact value of a coloring parameter with a certificate.

    proper gives the chromatic number (smallest k); the other kinds give the
    largest k admitting a coloring of that kind.

    Args:
        g: Graph with at least one vertex
        kind: Which parameter
        limit: Largest vertex count accepted (defaults depend on the kind)

    Raises:
        InvalidInputError: empty graph
        LimitExceededError: graph above the limit
    """
    if limit is None:
        limit = default_limit(kind)
    if g.vertex_count == 0:
        raise InvalidInputError("exact parameters need at least one vertex")
    if g.vertex_count > limit:
        raise LimitExceededError(f"exact {kind.value}", limit, g.vertex_count)

    bounds = parameter_bounds(g)
    if kind is ColoringKind.PROPER:
        targets = range(bounds.clique_lower, bounds.max_degree_plus_one + 1)
    elif kind is ColoringKind.GRUNDY:
        targets = range(bounds.second_degree_plus_one, 0, -1)
    elif kind is ColoringKind.PARTIAL_GRUNDY:
        targets = range(bounds.partial_grundy_upper, 0, -1)
    else:
        targets = range(m_degree(g), 0, -1)

    for k in targets:
        logger.debug(f"🔄 Trying {kind.value} with k={k} on {g.vertex_count} vertices")
        certificate = find_coloring(g, kind, k)
        if certificate is not None:
            logger.info(f"✅ Exact {kind.value} = {k} ({g.vertex_count} vertices, {g.edge_count} edges)")
            return k, certificate
    # unreachable: a chromatic coloring is of every kind and its k lies in every scanned range
    raise RuntimeError(f"no {kind.value} coloring found for any target")
