# SPDX-License-Identifier: GPL-3.0-or-later
#
# Grundy Kit: maximizing colorings and self-stabilizing frequency assignment.
# Copyright (C) 2025 Grundy Kit contributors

import networkx as nx
import numpy as np
import pytest
from pydantic import ValidationError

from grundy_kit.errors import InvalidInputError
from grundy_kit.graph import (
    Graph,
    bfs_distances,
    cartesian_product,
    cartesian_product_many,
    combine_many,
    conormal_sum,
    diameter,
    family,
    get_operator,
    interval_graph,
    power_graph,
    random_graph,
)


def test_from_edges_merges_duplicates():
    """Duplicate and reversed edges collapse into one"""
    g = Graph.from_edges(3, [(0, 1), (1, 0), (0, 1), (1, 2)])
    assert g.edge_count == 2
    assert list(g.edges()) == [(0, 1), (1, 2)]
    assert g.neighbors(1) == (0, 2)


def test_from_edges_rejects_loops_and_range():
    with pytest.raises(InvalidInputError):
        Graph.from_edges(2, [(1, 1)])
    with pytest.raises(InvalidInputError):
        Graph.from_edges(2, [(0, 2)])


def test_direct_construction_checks_symmetry():
    """Adjacency rows must agree with each other"""
    with pytest.raises(InvalidInputError):
        Graph(2, ((1,), ()))


def test_degrees_and_max_degree(p4):
    assert p4.degrees() == [1, 2, 2, 1]
    assert p4.max_degree == 2
    assert Graph.empty(3).max_degree == 0


@pytest.mark.parametrize("name,params,vertices,edges", [
    ("empty", (4,), 4, 0),
    ("path", (1,), 1, 0),
    ("path", (5,), 5, 4),
    ("cycle", (3,), 3, 3),
    ("complete", (5,), 5, 10),
    ("star", (5,), 6, 5),
    ("complete_bipartite", (2, 3), 5, 6),
    ("kary_tree", (2, 2), 7, 6),
    ("kary_tree", (3, 0), 1, 0),
])
def test_family_sizes(name, params, vertices, edges):
    g = family(name, *params)
    assert g.vertex_count == vertices
    assert g.edge_count == edges


def test_star_center_is_zero():
    g = family("star", 4)
    assert g.degree(0) == 4
    assert all(g.degree(leaf) == 1 for leaf in range(1, 5))


def test_family_parameter_errors():
    """Bounds name the family and the offending value"""
    with pytest.raises(ValidationError, match="cycle requires n >= 3"):
        family("cycle", 2)
    with pytest.raises(ValidationError):
        family("complete_bipartite", 0, 2)
    with pytest.raises(InvalidInputError):
        family("petersen", 10)
    with pytest.raises(InvalidInputError):
        family("path", 3, 4)


def test_power_of_cycle_is_complete():
    assert power_graph(family("cycle", 5), 2) == family("complete", 5)
    assert power_graph(family("cycle", 4), 2) == family("complete", 4)


@pytest.mark.parametrize("n", range(2, 9))
def test_path_power_reaches_complete(n):
    assert power_graph(family("path", n), n - 1) == family("complete", n)


def test_power_keeps_components_apart():
    g = Graph.from_edges(4, [(0, 1), (2, 3)])
    assert power_graph(g, 3) == g


def test_power_rejects_zero(p4):
    with pytest.raises(InvalidInputError):
        power_graph(p4, 0)


def test_cartesian_product_of_edges_is_c4(c4):
    """P_2 x P_2 is the 4-cycle up to relabeling"""
    p2 = family("path", 2)
    square = cartesian_product(p2, p2)
    assert nx.is_isomorphic(square.to_networkx(), c4.to_networkx())


SMALL_FACTORS = [
    Graph.empty(1),
    Graph.empty(3),
    family("path", 2),
    family("path", 4),
    family("cycle", 3),
    family("cycle", 5),
    family("star", 3),
    Graph.from_edges(5, [(0, 1), (2, 3)]),
]


def test_cartesian_product_follows_definition():
    """Adjacency checked pair by pair on every factor pair up to 5 x 5"""
    for g in SMALL_FACTORS:
        for h in SMALL_FACTORS:
            product = cartesian_product(g, h)
            width = h.vertex_count
            assert product.vertex_count == g.vertex_count * width
            assert product.edge_count == g.vertex_count * h.edge_count + width * g.edge_count
            for a in product.vertices:
                u1, v1 = divmod(a, width)
                for b in range(a + 1, product.vertex_count):
                    u2, v2 = divmod(b, width)
                    expected = (u1 == u2 and h.has_edge(v1, v2)) or (v1 == v2 and g.has_edge(u1, u2))
                    assert product.has_edge(a, b) == expected


def test_conormal_sum_follows_definition():
    for g in SMALL_FACTORS:
        for h in SMALL_FACTORS:
            total = conormal_sum(g, h)
            width = h.vertex_count
            expected_edges = (
                g.edge_count * width ** 2
                + h.edge_count * g.vertex_count ** 2
                - 2 * g.edge_count * h.edge_count
            )
            assert total.edge_count == expected_edges
            for a in total.vertices:
                u1, v1 = divmod(a, width)
                for b in range(a + 1, total.vertex_count):
                    u2, v2 = divmod(b, width)
                    assert total.has_edge(a, b) == (g.has_edge(u1, u2) or h.has_edge(v1, v2))


def reachable_within(g: Graph, k: int) -> np.ndarray:
    """Pairs joined by a walk of length <= k, from powers of A + I"""
    step = np.eye(g.vertex_count, dtype=np.int64)
    for u, v in g.edges():
        step[u, v] = step[v, u] = 1
    reach = np.eye(g.vertex_count, dtype=np.int64)
    for _ in range(k):
        reach = np.minimum(reach @ step, 1)
    return reach


@pytest.mark.parametrize("k", [1, 2, 3, 5])
def test_power_matches_walk_reachability(random_corpus, k):
    for g in random_corpus[:60]:
        reach = reachable_within(g, k)
        powered = power_graph(g, k)
        for u in g.vertices:
            for v in g.vertices:
                if u != v:
                    assert powered.has_edge(u, v) == bool(reach[u, v])


def test_power_identities(random_corpus):
    """G^1 = G composes away, and powers stop growing at the diameter"""
    for g in random_corpus:
        for k in (2, 3):
            assert power_graph(power_graph(g, 1), k) == power_graph(g, k)
        diam = diameter(g)
        if diam is None or diam == 0:
            continue
        for k in range(diam, diam + 3):
            assert power_graph(g, k) == power_graph(g, diam)
        assert power_graph(g, diam) == family("complete", g.vertex_count)


def test_conormal_sum_of_edges_is_k4():
    p2 = family("path", 2)
    assert conormal_sum(p2, p2) == family("complete", 4)


def test_conormal_sum_row_major_labels():
    """Vertex (u, v) is u * |V(H)| + v"""
    g = conormal_sum(family("path", 2), Graph.empty(2))
    assert g.has_edge(0, 2) and g.has_edge(0, 3) and g.has_edge(1, 2)
    assert not g.has_edge(0, 1)


def test_operators_reject_empty_factor(p4):
    with pytest.raises(InvalidInputError):
        cartesian_product(p4, Graph.empty(0))
    with pytest.raises(InvalidInputError):
        get_operator("tensor")


def test_product_of_three_paths_is_cube():
    p2 = family("path", 2)
    cube = cartesian_product_many([p2, p2, p2])
    assert nx.is_isomorphic(cube.to_networkx(), nx.hypercube_graph(3))
    assert combine_many([p2, p2, p2], "conormal") == family("complete", 8)


def test_distances_and_diameter(p4):
    assert bfs_distances(p4, 0) == [0, 1, 2, 3]
    assert diameter(p4) == 3
    assert diameter(family("complete", 4)) == 1
    assert diameter(Graph.from_edges(3, [(0, 1)])) is None
    assert bfs_distances(Graph.from_edges(3, [(0, 1)]), 2) == [None, None, 0]


def test_induced_subgraph_relabels(c4):
    sub = c4.induced_subgraph([2, 1, 0])
    assert list(sub.edges()) == [(0, 1), (1, 2)]
    with pytest.raises(InvalidInputError):
        c4.induced_subgraph([0, 0])


def test_networkx_interchange_sorts_labels():
    nx_graph = nx.Graph([(10, 30), (30, 20)])
    g = Graph.from_networkx(nx_graph)
    assert list(g.edges()) == [(0, 2), (1, 2)]


def test_random_graph_is_seeded():
    assert random_graph(12, 0.4, seed=7) == random_graph(12, 0.4, seed=7)
    assert random_graph(5, 0.0, seed=1).edge_count == 0
    assert random_graph(5, 1.0, seed=1) == family("complete", 5)
    with pytest.raises(InvalidInputError):
        random_graph(5, 1.5, seed=1)


@pytest.mark.parametrize("seed", range(10))
def test_interval_graphs_are_chordal(seed):
    g = interval_graph(30, seed)
    assert nx.is_chordal(g.to_networkx())
    assert g == interval_graph(30, seed)
