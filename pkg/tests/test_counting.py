from itertools import combinations, permutations
from math import comb, factorial

import pytest
from hypothesis import given
from hypothesis import strategies as st

from satex.counting import (
    EdgeWeighting,
    codegree_sum,
    codegree_vector,
    count_injective_maps,
    count_subgraphs,
    count_weighted_subgraphs,
)
from satex.families import turan_graph
from satex.graph import Graph
from satex.patterns import PatternError, PatternSpec, parse_pattern
from satex.search import enumerate_nonisomorphic_graphs
from strategies import graphs, graphs_with_perm


def naive_count(pattern: Graph, host: Graph) -> int:
    """Distinct (vertex set, edge set) images over all vertex subsets and bijections."""
    k = pattern.n
    pedges = pattern.edges()
    copies = set()
    for subset in combinations(range(host.n), k):
        for phi in permutations(subset):
            if all(host.has_edge(phi[u], phi[v]) for u, v in pedges):
                copies.add((frozenset(subset), frozenset(frozenset((phi[u], phi[v])) for u, v in pedges)))
    return len(copies)


NAMED = [
    PatternSpec.clique(k) for k in (1, 2, 3, 4, 5)
] + [
    PatternSpec.path(k) for k in (1, 2, 3, 4, 5)
] + [
    PatternSpec.cycle(k) for k in (3, 4, 5)
] + [
    PatternSpec.star(s) for s in (1, 2, 3, 4)
] + [
    PatternSpec.bipartite(a, b) for a, b in ((1, 1), (1, 2), (2, 1), (2, 2), (2, 3), (1, 4))
]
ALL_SMALL = [PatternSpec.from_graph(g) for k in range(1, 6) for g in enumerate_nonisomorphic_graphs(k)]


# -- patterns ---------------------------------------------------------------------


@pytest.mark.parametrize("p", NAMED, ids=str)
def test_aut_closed_forms_match_brute_force(p):
    assert p.aut == count_injective_maps(p.graph, p.graph)


def test_aut_divides_factorial_for_explicit():
    for p in ALL_SMALL:
        assert factorial(p.num_vertices) % p.aut == 0


@pytest.mark.parametrize(
    "text, expected",
    [
        ("K3", PatternSpec.clique(3)),
        ("K2,3", PatternSpec.bipartite(2, 3)),
        ("K_{2,3}", PatternSpec.bipartite(2, 3)),
        ("S3", PatternSpec.star(3)),
        ("P4", PatternSpec.path(4)),
        ("c5", PatternSpec.cycle(5)),
    ],
)
def test_parse_pattern(text, expected):
    assert parse_pattern(text) == expected


def test_parse_disjoint_copies_and_graph6():
    two = parse_pattern("2K2")
    assert two.num_vertices == 4 and two.num_edges == 2 and two.aut == 8
    assert parse_pattern("g6:Bw").graph == Graph.complete(3)


@pytest.mark.parametrize("bad", ["Q3", "P2,3", "C2", "g6:A`", ""])
def test_parse_pattern_rejects(bad):
    with pytest.raises(PatternError):
        parse_pattern(bad)


# -- counting -----------------------------------------------------------------------


def test_counting_examples():
    assert count_subgraphs(PatternSpec.path(3), Graph.complete(3)) == 3
    assert count_subgraphs(PatternSpec.cycle(4), Graph.complete_bipartite(2, 3)) == 3
    assert count_subgraphs(PatternSpec.star(2), Graph.star(5)) == 10
    assert count_subgraphs(PatternSpec.clique(3), turan_graph(3, 6)) == 8


def test_degenerate_conventions():
    assert count_subgraphs(PatternSpec.clique(0), Graph.complete(3)) == 1
    assert count_subgraphs(PatternSpec.clique(4), Graph.complete(3)) == 0
    assert count_subgraphs(PatternSpec.path(1), Graph.empty(4)) == 4


def test_weighted_examples():
    k4 = Graph.complete(4)
    assert count_weighted_subgraphs(PatternSpec.path(3), k4, EdgeWeighting.uniform(k4)) == 12
    k2 = Graph.complete(2)
    assert count_weighted_subgraphs(PatternSpec.clique(2), k2, EdgeWeighting.from_pairs({(0, 1): 2.5})) == 2.5
    k3 = Graph.complete(3)
    w = EdgeWeighting.from_pairs({(0, 1): 1, (1, 2): 2, (0, 2): 3})
    assert count_weighted_subgraphs(PatternSpec.path(3), k3, w) == 11.0


def test_weighting_rejects_negative_and_partial():
    k3 = Graph.complete(3)
    with pytest.raises(ValueError):
        count_weighted_subgraphs(PatternSpec.clique(2), k3, EdgeWeighting.from_pairs({(0, 1): 1, (1, 2): -1, (0, 2): 1}))
    with pytest.raises(ValueError):
        count_weighted_subgraphs(PatternSpec.clique(2), k3, EdgeWeighting.from_pairs({(0, 1): 1}))


@pytest.mark.parametrize("n", range(1, 7))
def test_oracle_equivalence_exhaustive(n):
    """Every graph class on <= 6 vertices against every pattern on <= 5 vertices."""
    for host in enumerate_nonisomorphic_graphs(n):
        for p in ALL_SMALL + NAMED:
            if p.num_vertices <= 5:
                assert count_subgraphs(p, host) == naive_count(p.graph, host), (p, host)


@given(graphs(max_n=6), st.sampled_from(NAMED))
def test_oracle_equivalence_labeled(g, p):
    if p.num_vertices <= 5:
        assert count_subgraphs(p, g) == naive_count(p.graph, g)


@given(graphs(max_n=7), st.sampled_from(NAMED))
def test_weighted_with_unit_weights_equals_count(g, p):
    assert count_weighted_subgraphs(p, g, EdgeWeighting.uniform(g)) == count_subgraphs(p, g)


@given(graphs_with_perm(), st.sampled_from(NAMED))
def test_isomorphism_invariance(gp, p):
    g, perm = gp
    assert count_subgraphs(p, g) == count_subgraphs(p, g.relabel(perm))


@given(graphs(min_n=2, max_n=7), st.sampled_from(NAMED), st.data())
def test_adding_an_edge_never_decreases_counts(g, p, data):
    non_edges = [(u, v) for u in range(g.n) for v in range(u + 1, g.n) if not g.has_edge(u, v)]
    if not non_edges:
        return
    u, v = data.draw(st.sampled_from(non_edges))
    assert count_subgraphs(p, g.toggle_edge(u, v)) >= count_subgraphs(p, g)


# -- co-degrees ----------------------------------------------------------------------------


def test_codegree_examples():
    assert {d for _, d in codegree_vector(Graph.complete(4), 2)} == {2}
    for g in (Graph.cycle(5), Graph.petersen()):
        for (u, v), d in codegree_vector(g, 2):
            assert d == (0 if g.has_edge(u, v) else 1)
    assert len(codegree_vector(Graph.petersen(), 2)) == 45


@given(graphs(min_n=1, max_n=7), st.integers(1, 3))
def test_codegree_identity(g, a):
    """sum_A d(A) over a-sets equals sum_y C(d(y), a)."""
    if a > g.n:
        return
    assert sum(d for _, d in codegree_vector(g, a)) == sum(comb(d, a) for d in g.degrees())


@given(graphs(min_n=1, max_n=7), st.integers(1, 3), st.integers(1, 3))
def test_codegree_sum_counts_complete_bipartite(g, a, b):
    if a > g.n:
        return
    total = sum(comb(d, b) for _, d in codegree_vector(g, a))
    assert total == codegree_sum(g, a, b)
    factor = 2 if a == b else 1
    assert total == factor * count_subgraphs(PatternSpec.bipartite(a, b), g)
