# SPDX-License-Identifier: GPL-3.0-or-later
#
# Grundy Kit: maximizing colorings and self-stabilizing frequency assignment.
# Copyright (C) 2025 Grundy Kit contributors

import json

import numpy as np
import pytest

from grundy_kit.coloring import (
    Coloring,
    ColoringKind,
    VertexOrder,
    binomial_tree,
    coloring_to_json,
    coloring_to_lines,
    exact_parameter,
    exhaustive_assignment_oracle,
    find_coloring,
    first_fit,
    grundy_permutation_oracle,
    m_degree,
    mex,
    parameter_bounds,
    parameter_table,
    parse_coloring,
    partial_grundy_bound,
    verify,
)
from grundy_kit.errors import InvalidInputError, LimitExceededError, MalformedColoringError
from grundy_kit.graph import Graph, cartesian_product, family, random_graph

GRUNDY = ColoringKind.GRUNDY
PARTIAL = ColoringKind.PARTIAL_GRUNDY
B_COLORING = ColoringKind.B_COLORING
PROPER = ColoringKind.PROPER


def gamma(g: Graph) -> int:
    return exact_parameter(g, GRUNDY)[0]


def test_mex():
    assert mex([]) == 1
    assert mex([2, 3]) == 1
    assert mex([1, 2, 4]) == 3
    assert mex([1, 1, 2]) == 3


def test_first_fit_follows_order(p4):
    assert first_fit(p4, [0, 3, 1, 2]).colors == (1, 2, 3, 1)
    assert first_fit(p4).colors == (1, 2, 1, 2)
    assert first_fit(p4, VertexOrder((1, 2, 0, 3))).colors == (2, 1, 2, 1)


def test_first_fit_rejects_bad_orders(p4):
    with pytest.raises(InvalidInputError):
        first_fit(p4, [0, 1, 2])
    with pytest.raises(InvalidInputError):
        first_fit(p4, [0, 1, 1, 2])


def test_first_fit_output_is_always_grundy(random_corpus):
    for g in random_corpus[:50]:
        order = list(reversed(range(g.vertex_count)))
        assert verify(g, first_fit(g, order), GRUNDY).valid


def test_coloring_rejects_nonpositive_colors():
    with pytest.raises(MalformedColoringError):
        Coloring((1, 0, 2))
    with pytest.raises(MalformedColoringError):
        Coloring((1, True))


def test_verify_grundy_on_c5():
    report = verify(family("cycle", 5), [1, 2, 1, 2, 3], GRUNDY)
    assert report.valid
    assert report.k == 3
    assert report.counterexample is None
    assert report.witnesses[2] == [4]


def test_verify_b_coloring_missing_class(p4):
    """Neither vertex of class 1 sees class 3"""
    report = verify(p4, [1, 2, 3, 1], B_COLORING)
    assert not report.valid
    assert report.counterexample.to_dict() == {"missing_color": 3, "class": 1}


def test_verify_reports_conflict_edge(p4):
    report = verify(p4, [1, 1, 2, 3], PROPER)
    assert not report.valid
    assert report.counterexample.edge == (0, 1)


def test_verify_grundy_names_the_bad_vertex(p4):
    report = verify(p4, [1, 3, 1, 2], GRUNDY)
    assert not report.valid
    assert report.counterexample.vertex == 1
    assert report.counterexample.missing_color == 2


def test_verify_gap_free_except_proper():
    p3 = family("path", 3)
    assert verify(p3, [1, 3, 1], PROPER).valid
    report = verify(p3, [1, 3, 1], GRUNDY)
    assert not report.valid
    assert report.counterexample.to_dict() == {"missing_color": 2, "class": 2}


def test_partial_grundy_is_weaker_than_grundy():
    """One greedy vertex per class is enough for partial Grundy"""
    g = Graph.from_edges(3, [(0, 1)])
    assert verify(g, [1, 2, 2], PARTIAL).valid
    report = verify(g, [1, 2, 2], GRUNDY)
    assert not report.valid
    assert report.counterexample.vertex == 2


def test_verify_rejects_wrong_length(p4):
    with pytest.raises(MalformedColoringError):
        verify(p4, [1, 2, 1], PROPER)


def test_single_vertex_b_coloring():
    assert verify(Graph.empty(1), [1], B_COLORING).valid


@pytest.mark.parametrize("n,expected", list(zip(range(1, 9), [1, 2, 2, 3, 3, 3, 3, 3])))
def test_grundy_of_paths(n, expected):
    assert gamma(family("path", n)) == expected


@pytest.mark.parametrize("n,expected", list(zip(range(3, 9), [3, 2, 3, 3, 3, 3])))
def test_grundy_of_cycles(n, expected):
    assert gamma(family("cycle", n)) == expected


@pytest.mark.parametrize("n", range(1, 7))
def test_grundy_of_complete_graphs(n):
    assert gamma(family("complete", n)) == n


@pytest.mark.parametrize("m", range(1, 5))
@pytest.mark.parametrize("n", range(1, 5))
def test_grundy_of_complete_bipartite(m, n):
    assert gamma(family("complete_bipartite", m, n)) == 2


@pytest.mark.parametrize("n", range(1, 8))
def test_grundy_of_stars(n):
    assert gamma(family("star", n)) == 2


def test_exact_certificate_is_lexicographically_smallest(p4):
    k, certificate = exact_parameter(p4, GRUNDY)
    assert k == 3
    assert certificate.colors == (1, 2, 3, 1)


def test_other_parameters_on_small_graphs(p4, c4):
    c5 = family("cycle", 5)
    assert exact_parameter(p4, PROPER)[0] == 2
    assert exact_parameter(c5, PROPER)[0] == 3
    assert exact_parameter(family("complete", 4), PROPER)[0] == 4
    assert exact_parameter(c4, PARTIAL)[0] == 2
    assert exact_parameter(p4, B_COLORING)[0] == 2
    assert exact_parameter(c5, B_COLORING)[0] == 3
    assert exact_parameter(family("star", 5), B_COLORING)[0] == 2


def test_find_coloring_returns_none_above_the_parameter(p4):
    assert find_coloring(p4, GRUNDY, 4) is None
    assert find_coloring(p4, GRUNDY, 3) is not None


def hub_star(leaves: int, hub_last: bool) -> Graph:
    hub = leaves if hub_last else 0
    others = [v for v in range(leaves + 1) if v != hub]
    return Graph.from_edges(leaves + 1, [(hub, v) for v in others])


@pytest.mark.parametrize("kind", [PARTIAL, B_COLORING, GRUNDY])
def test_star_certificates_do_not_depend_on_hub_position(kind):
    k, certificate = exact_parameter(hub_star(11, hub_last=True), kind)
    assert k == 2
    assert certificate.colors == (1,) * 11 + (2,)
    k, certificate = exact_parameter(hub_star(11, hub_last=False), kind)
    assert k == 2
    assert certificate.colors == (1,) + (2,) * 11


def with_universal_vertex(g: Graph, last: bool) -> Graph:
    n = g.vertex_count
    if last:
        return Graph.from_edges(n + 1, list(g.edges()) + [(v, n) for v in g.vertices])
    return Graph.from_edges(n + 1, [(u + 1, v + 1) for u, v in g.edges()] + [(0, v + 1) for v in g.vertices])


@pytest.mark.parametrize("kind", list(ColoringKind))
def test_relabeling_a_hub_keeps_the_parameter(kind):
    for seed in range(12):
        g = random_graph(8, 0.3 + 0.04 * seed, seed)
        first_k, first = exact_parameter(with_universal_vertex(g, last=False), kind)
        last_k, last = exact_parameter(with_universal_vertex(g, last=True), kind)
        assert first_k == last_k
        assert verify(with_universal_vertex(g, last=False), first, kind).valid
        assert verify(with_universal_vertex(g, last=True), last, kind).valid
        if kind is not PROPER:
            assert first_k <= parameter_bounds(with_universal_vertex(g, last=True)).partial_grundy_upper


@pytest.mark.slow
@pytest.mark.parametrize("kind", list(ColoringKind))
def test_parameters_are_invariant_under_vertex_permutation(random_corpus, kind):
    rng = np.random.default_rng(17)
    for g in random_corpus[:60]:
        perm = [int(v) for v in rng.permutation(g.vertex_count)]
        permuted = Graph.from_edges(g.vertex_count, [(perm[u], perm[v]) for u, v in g.edges()])
        assert exact_parameter(permuted, kind)[0] == exact_parameter(g, kind)[0]


@pytest.mark.parametrize("g,expected", [
    (family("path", 4), 3),
    (family("star", 5), 3),
    (family("complete", 5), 5),
    (Graph.empty(3), 1),
    (Graph.empty(0), 0),
    (family("cycle", 6), 3),
])
def test_partial_grundy_bound(g, expected):
    assert partial_grundy_bound(g) == expected


def test_exact_parameter_limits():
    with pytest.raises(LimitExceededError) as excinfo:
        exact_parameter(family("path", 30), GRUNDY)
    assert excinfo.value.limit == 16
    assert excinfo.value.actual == 30
    assert exact_parameter(family("path", 20), GRUNDY, limit=20)[0] == 3
    with pytest.raises(InvalidInputError):
        exact_parameter(Graph.empty(0), GRUNDY)


def test_bounds_report(p4):
    bounds = parameter_bounds(p4)
    assert bounds.max_degree_plus_one == 3
    assert bounds.clique_lower == 2
    assert bounds.m_degree == 2
    assert bounds.second_degree_plus_one == 3
    assert bounds.partial_grundy_upper == 3
    assert bounds.to_dict()["partial_grundy_upper"] == 3
    star = parameter_bounds(family("star", 5))
    assert star.max_degree_plus_one == 6
    assert star.second_degree_plus_one == 2
    assert star.partial_grundy_upper == 3
    assert parameter_bounds(Graph.empty(3)).second_degree_plus_one == 1


def test_m_degree():
    assert m_degree(family("path", 4)) == 2
    assert m_degree(family("star", 5)) == 2
    assert m_degree(family("complete", 5)) == 5
    assert m_degree(family("cycle", 6)) == 3


@pytest.mark.slow
def test_exact_matches_permutation_oracle(random_corpus):
    mismatches = [
        i for i, g in enumerate(random_corpus)
        if exact_parameter(g, GRUNDY)[0] != grundy_permutation_oracle(g)
    ]
    assert mismatches == []


@pytest.mark.slow
@pytest.mark.parametrize("kind", [PROPER, PARTIAL, B_COLORING])
def test_exact_matches_exhaustive_oracle(random_corpus, kind):
    mismatches = [
        i for i, g in enumerate(random_corpus)
        if exact_parameter(g, kind)[0] != exhaustive_assignment_oracle(g, kind)
    ]
    assert mismatches == []


@pytest.mark.slow
def test_parameter_chain(random_corpus):
    """chi <= Gamma <= partial Gamma <= max degree + 1, and chi <= b <= m"""
    for g in random_corpus:
        chi = exact_parameter(g, PROPER)[0]
        grundy = exact_parameter(g, GRUNDY)[0]
        partial = exact_parameter(g, PARTIAL)[0]
        b = exact_parameter(g, B_COLORING)[0]
        bounds = parameter_bounds(g)
        assert chi <= grundy <= partial <= bounds.max_degree_plus_one
        assert partial <= bounds.partial_grundy_upper <= bounds.max_degree_plus_one
        assert grundy <= bounds.second_degree_plus_one
        assert chi <= b <= bounds.m_degree


@pytest.mark.slow
@pytest.mark.parametrize("kind", list(ColoringKind))
def test_certificates_verify(random_corpus, kind):
    for g in random_corpus[:100]:
        k, certificate = exact_parameter(g, kind)
        report = verify(g, certificate, kind)
        assert report.valid
        assert report.k == k


def test_oracles_respect_their_limit():
    with pytest.raises(LimitExceededError):
        grundy_permutation_oracle(family("path", 9))
    with pytest.raises(LimitExceededError):
        exhaustive_assignment_oracle(family("path", 9), PROPER)


@pytest.mark.parametrize("k", range(1, 6))
def test_binomial_tree_grundy_number(k):
    g, coloring = binomial_tree(k)
    assert g.vertex_count == 2 ** (k - 1)
    assert g.edge_count == g.vertex_count - 1
    assert coloring.colors[0] == k
    assert gamma(g) == k


@pytest.mark.parametrize("k", range(6, 11))
def test_binomial_tree_canonical_coloring(k):
    g, coloring = binomial_tree(k)
    report = verify(g, coloring, GRUNDY)
    assert report.valid
    assert report.k == k


def test_binomial_tree_limits():
    with pytest.raises(InvalidInputError):
        binomial_tree(0)
    with pytest.raises(LimitExceededError):
        binomial_tree(17)


SWEEP_FACTORS = {
    "P2": family("path", 2),
    "P3": family("path", 3),
    "P4": family("path", 4),
    "C3": family("cycle", 3),
    "C4": family("cycle", 4),
    "C5": family("cycle", 5),
    "K2": family("complete", 2),
    "K3": family("complete", 3),
}


@pytest.mark.slow
def test_product_grundy_dominates_factors():
    names = sorted(SWEEP_FACTORS)
    checked = 0
    for i, left in enumerate(names):
        for right in names[i:]:
            g, h = SWEEP_FACTORS[left], SWEEP_FACTORS[right]
            if g.vertex_count * h.vertex_count > 16:
                continue
            assert gamma(cartesian_product(g, h)) >= max(gamma(g), gamma(h)), (left, right)
            checked += 1
    assert checked == 33


@pytest.mark.slow
def test_grundy_is_monotone_on_induced_subgraphs(random_corpus):
    rng = np.random.default_rng(5)
    graphs = [g for g in random_corpus if g.vertex_count >= 2]
    for index in rng.choice(len(graphs), size=50, replace=False):
        g = graphs[int(index)]
        size = int(rng.integers(1, g.vertex_count))
        subset = sorted(int(v) for v in rng.choice(g.vertex_count, size=size, replace=False))
        assert gamma(g.induced_subgraph(subset)) <= gamma(g)


def test_parameter_table_path_by_path():
    entries = parameter_table("product", "path", "path", [1, 2])
    assert [entry.to_dict() for entry in entries] == [
        {"m": 1, "n": 1, "vertices": 1, "value": 1},
        {"m": 1, "n": 2, "vertices": 2, "value": 2},
        {"m": 2, "n": 1, "vertices": 2, "value": 2},
        {"m": 2, "n": 2, "vertices": 4, "value": 2},
    ]


def test_parameter_table_skips_large_and_small():
    entries = parameter_table("product", "cycle", "path", [1, 3], limit=8)
    assert [(e.left_size, e.right_size, e.value) for e in entries] == [(3, 1, 3), (3, 3, None)]
    with pytest.raises(InvalidInputError):
        parameter_table("product", "kary_tree", "path", [2])


def test_parse_coloring_lines_and_json():
    assert parse_coloring("# c\n0 1\n1 2\n2 1\n").colors == (1, 2, 1)
    assert parse_coloring("1 2\n0 1\n").colors == (1, 2)
    assert parse_coloring('{"k": 2, "certificate": [1, 2]}').colors == (1, 2)
    assert parse_coloring('{"colors": [2, 1, 2]}').colors == (2, 1, 2)


def test_parse_coloring_errors():
    with pytest.raises(MalformedColoringError):
        parse_coloring("0 1\n0 2\n")
    with pytest.raises(MalformedColoringError):
        parse_coloring("0 1\n2 1\n")
    with pytest.raises(InvalidInputError, match="line 1"):
        parse_coloring("0 1 2\n")
    with pytest.raises(MalformedColoringError):
        parse_coloring('{"colors": [1, 0]}')
    with pytest.raises(InvalidInputError):
        parse_coloring('{"colors": [1, 2}')


def test_coloring_interchange_outputs(p4):
    coloring = Coloring((1, 2, 3, 1))
    assert coloring_to_lines(coloring) == "0 1\n1 2\n2 3\n3 1\n"
    payload = coloring_to_json(coloring, GRUNDY, verify(p4, coloring, GRUNDY))
    assert payload == {"k": 3, "colors": [1, 2, 3, 1], "kind": "grundy", "valid": True}
    assert parse_coloring(json.dumps(payload)) == coloring
