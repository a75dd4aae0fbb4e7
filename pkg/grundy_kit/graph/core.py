# SPDX-License-Identifier: GPL-3.0-or-later
#
# Grundy Kit: maximizing colorings and self-stabilizing frequency assignment.
# Copyright (C) 2025 Grundy Kit contributors

"""
Immutable undirected simple graph on dense integer vertex ids.
"""

from dataclasses import dataclass, field
from typing import FrozenSet, Iterable, Iterator, List, Optional, Sequence, Tuple
import logging

import networkx as nx

from ..errors import InvalidInputError

logger = logging.getLogger(__name__)

Edge = Tuple[int, int]


@dataclass(frozen=True)
class Graph:
    """
    Undirected simple graph on vertices 0..vertex_count-1.

    adjacency[v] is the sorted tuple of neighbors of v. Instances are
    immutable and safe to share between workers; build them through
    from_edges() so the symmetry / no-loop / range invariants hold.
    """
    vertex_count: int
    adjacency: Tuple[Tuple[int, ...], ...]
    _neighbor_sets: Tuple[FrozenSet[int], ...] = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        if self.vertex_count < 0:
            raise InvalidInputError(f"vertex count must be non-negative, got {self.vertex_count}")
        if len(self.adjacency) != self.vertex_count:
            raise InvalidInputError(
                f"adjacency has {len(self.adjacency)} rows for {self.vertex_count} vertices"
            )
        neighbor_sets = tuple(frozenset(row) for row in self.adjacency)
        for v, row in enumerate(self.adjacency):
            if v in neighbor_sets[v]:
                raise InvalidInputError(f"self-loop on vertex {v}")
            for u in row:
                if not 0 <= u < self.vertex_count:
                    raise InvalidInputError(f"neighbor {u} of vertex {v} out of range")
                if v not in neighbor_sets[u]:
                    raise InvalidInputError(f"asymmetric adjacency between {v} and {u}")
        object.__setattr__(self, "_neighbor_sets", neighbor_sets)

    @classmethod
    def from_edges(cls, vertex_count: int, edges: Iterable[Edge]) -> "Graph":
        """Build a graph from an edge iterable; duplicate edges are merged, loops rejected."""
        if vertex_count < 0:
            raise InvalidInputError(f"vertex count must be non-negative, got {vertex_count}")
        rows: List[set] = [set() for _ in range(vertex_count)]
        for u, v in edges:
            if not (0 <= u < vertex_count and 0 <= v < vertex_count):
                raise InvalidInputError(f"edge ({u}, {v}) out of range for {vertex_count} vertices")
            if u == v:
                raise InvalidInputError(f"self-loop on vertex {u}")
            rows[u].add(v)
            rows[v].add(u)
        return cls(vertex_count, tuple(tuple(sorted(r)) for r in rows))

    @classmethod
    def empty(cls, vertex_count: int) -> "Graph":
        return cls.from_edges(vertex_count, ())

    @classmethod
    def from_networkx(cls, nx_graph: nx.Graph) -> "Graph":
        """Import a networkx graph; nodes are relabeled 0..n-1 in sorted order."""
        nodes = sorted(nx_graph.nodes())
        index = {node: i for i, node in enumerate(nodes)}
        return cls.from_edges(len(nodes), ((index[u], index[v]) for u, v in nx_graph.edges()))

    def to_networkx(self) -> nx.Graph:
        nx_graph = nx.Graph()
        nx_graph.add_nodes_from(range(self.vertex_count))
        nx_graph.add_edges_from(self.edges())
        return nx_graph

    @property
    def vertices(self) -> range:
        return range(self.vertex_count)

    def neighbors(self, v: int) -> Tuple[int, ...]:
        return self.adjacency[v]

    def neighbor_set(self, v: int) -> FrozenSet[int]:
        return self._neighbor_sets[v]

    def has_edge(self, u: int, v: int) -> bool:
        return v in self._neighbor_sets[u]

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def degrees(self) -> List[int]:
        return [len(row) for row in self.adjacency]

    @property
    def max_degree(self) -> int:
        return max(self.degrees(), default=0)

    @property
    def edge_count(self) -> int:
        return sum(len(row) for row in self.adjacency) // 2

    def edges(self) -> Iterator[Edge]:
        """Edges as (u, v) with u < v in lexicographic order."""
        for u, row in enumerate(self.adjacency):
            for v in row:
                if u < v:
                    yield (u, v)

    def induced_subgraph(self, vertices: Sequence[int]) -> "Graph":
        """Subgraph induced by vertices, relabeled by their position in the sequence."""
        index = {v: i for i, v in enumerate(vertices)}
        if len(index) != len(vertices):
            raise InvalidInputError("induced_subgraph vertices must be distinct")
        for v in vertices:
            if not 0 <= v < self.vertex_count:
                raise InvalidInputError(f"vertex {v} out of range")
        edges = (
            (index[u], index[w])
            for u in vertices
            for w in self.adjacency[u]
            if w in index and u < w
        )
        return Graph.from_edges(len(vertices), edges)


def bfs_distances(g: Graph, source: int) -> List[Optional[int]]:
    """Hop distances from source; None marks unreachable vertices."""
    if not 0 <= source < g.vertex_count:
        raise InvalidInputError(f"source {source} out of range for {g.vertex_count} vertices")
    reached = nx.single_source_shortest_path_length(g.to_networkx(), source)
    return [reached.get(v) for v in g.vertices]


def diameter(g: Graph) -> Optional[int]:
    """Largest hop distance, or None when the graph is disconnected or empty."""
    if g.vertex_count == 0:
        return None
    nx_graph = g.to_networkx()
    if not nx.is_connected(nx_graph):
        return None
    return nx.diameter(nx_graph)
