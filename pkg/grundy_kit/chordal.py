# SPDX-License-Identifier: GPL-3.0-or-later
#
# Grundy Kit: maximizing colorings and self-stabilizing frequency assignment.
# Copyright (C) 2025 Grundy Kit contributors

"""
Chordal graphs: Lex-BFS, perfect elimination orderings and PEO-driven coloring.
"""

from dataclasses import dataclass, field
from typing import Any, Dict, List, Tuple, Union
import logging

from .coloring import Coloring, ColoringKind, VertexOrder, WitnessReport, first_fit, verify
from .errors import InvalidInputError, NotChordalError
from .graph import Graph

logger = logging.getLogger(__name__)


@dataclass
class EliminationOrder:
    """A verified perfect elimination ordering"""
    order: List[int]
    # later_neighborhoods[i]: neighbors of order[i] placed after position i
    later_neighborhoods: List[List[int]] = field(default_factory=list)

    @property
    def omega(self) -> int:
        return 1 + max((len(later) for later in self.later_neighborhoods), default=0)

    def to_dict(self) -> Dict[str, Any]:
        return {"chordal": True, "order": self.order, "omega": self.omega}


@dataclass
class NotChordal:
    """Certificate: vertex whose later neighbors a and b are not adjacent"""
    vertex: int
    missing_edge: Tuple[int, int]
    order: List[int] = field(default_factory=list)

    def to_dict(self) -> Dict[str, Any]:
        return {"chordal": False, "vertex": self.vertex, "missing_edge": list(self.missing_edge), "order": self.order}

    def __str__(self) -> str:
        a, b = self.missing_edge
        return f"later neighbors {a} and {b} of vertex {self.vertex} are not adjacent"


@dataclass
class ChordalColoring:
    """Coloring from first-fit along the reversed PEO, with its Grundy check"""
    coloring: Coloring
    omega: int
    grundy_report: WitnessReport

    def to_dict(self) -> Dict[str, Any]:
        return {
            "k": self.coloring.k,
            "omega": self.omega,
            "colors": list(self.coloring.colors),
            "grundy_valid": self.grundy_report.valid,
        }


def lex_bfs(g: Graph) -> VertexOrder:
    """
    Lexicographic breadth-first order, starting at vertex 0.

    Each visited vertex appends a decreasing stamp to the labels of its
    unvisited neighbors; the next vertex has the largest label, ties going
    to the smallest id. Empty labels (other components) restart the search.
    """
    if g.vertex_count == 0:
        raise InvalidInputError("lex_bfs needs a non-empty graph")
    n = g.vertex_count
    labels: List[List[int]] = [[] for _ in range(n)]
    visited = [False] * n
    order: List[int] = []
    for step in range(n):
        best = None
        for v in range(n):
            if not visited[v] and (best is None or labels[v] > labels[best]):
                best = v
        visited[best] = True
        order.append(best)
        stamp = n - step
        for w in g.neighbors(best):
            if not visited[w]:
                labels[w].append(stamp)
    return VertexOrder(tuple(order))


def check_elimination_order(g: Graph, order: List[int]) -> Union[EliminationOrder, NotChordal]:
    """Brute-force check that every later-neighborhood in order is a clique."""
    position = {v: i for i, v in enumerate(order)}
    later_neighborhoods: List[List[int]] = []
    for i, v in enumerate(order):
        later = sorted((u for u in g.neighbors(v) if position[u] > i), key=position.__getitem__)
        for a_index, a in enumerate(later):
            for b in later[a_index + 1:]:
                if not g.has_edge(a, b):
                    return NotChordal(vertex=v, missing_edge=(min(a, b), max(a, b)), order=list(order))
        later_neighborhoods.append(later)
    return EliminationOrder(order=list(order), later_neighborhoods=later_neighborhoods)


def perfect_elimination_order(g: Graph) -> Union[EliminationOrder, NotChordal]:
    """Reverse Lex-BFS, re-verified; a failed check proves the graph is not chordal."""
    order = list(reversed(lex_bfs(g).order))
    result = check_elimination_order(g, order)
    if isinstance(result, NotChordal):
        logger.debug(f"🔧 Not chordal: {result}")
    else:
        logger.debug(f"🔧 Chordal, omega = {result.omega}")
    return result


def chordal_color(g: Graph) -> ChordalColoring:
    """
    Optimal coloring of a chordal graph: first-fit along the reversed PEO.

    Uses exactly omega colors. The Grundy status of the result is reported.

    Raises:
        NotChordalError: carrying the NotChordal certificate
    """
    peo = perfect_elimination_order(g)
    if isinstance(peo, NotChordal):
        raise NotChordalError(peo)
    coloring = first_fit(g, list(reversed(peo.order)))
    report = verify(g, coloring, ColoringKind.GRUNDY)
    if coloring.k != peo.omega:
        logger.warning(f"⚠️  Reverse-PEO coloring used {coloring.k} colors, omega is {peo.omega}")
    return ChordalColoring(coloring=coloring, omega=peo.omega, grundy_report=report)
