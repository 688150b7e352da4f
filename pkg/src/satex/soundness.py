"""Exhaustive soundness sweep: every certified evaluator against true counts
on every graph up to a given order."""

from __future__ import annotations

from .bounds import (
    bollobas_interpolated_bound,
    csillag1_lower_bound,
    kqt_projection_bound,
    kruskal_katona_bound,
)
from .counting import count_subgraphs
from .patterns import PatternSpec
from .search import enumerate_nonisomorphic_graphs

CSILLAG_TRIPLES = ((1, 2, 1), (2, 2, 1), (2, 2, 2), (1, 3, 2))
# (q, t, s, r): copies of K_{q,t} bound copies of K_{r,s}
KQT_TUPLES = ((2, 2, 1, 2), (2, 2, 1, 1), (2, 3, 2, 2), (2, 3, 1, 2), (1, 3, 1, 1), (1, 3, 2, 1), (3, 3, 2, 2))
EPS = 1e-9


def _ok(bound, truth):
    return float(bound) <= truth + EPS * max(1, truth)


def sweep(max_n: int):
    """Return (number of checks, violations as (n, graph6, check, bound, truth))."""
    K3 = PatternSpec.clique(3)
    checks, violations = 0, []
    for n in range(1, max_n + 1):
        for g in enumerate_nonisomorphic_graphs(n):
            edges = g.edge_count()
            tri = count_subgraphs(K3, g)
            cases = []
            for s, a, b in CSILLAG_TRIPLES:
                stars = count_subgraphs(PatternSpec.star(s), g)
                cases.append((f"csillag1{(s, a, b)}", csillag1_lower_bound(n, stars, s, a, b).value,
                              count_subgraphs(PatternSpec.bipartite(a, b), g)))
            cases.append(("kruskal_katona(3,2)", kruskal_katona_bound(tri, 3, 2).value, edges))
            cases.append(("kruskal_katona(2,1)", kruskal_katona_bound(edges, 2, 1).value,
                          sum(1 for d in g.degrees() if d)))
            for q, t, s, r in KQT_TUPLES:
                m = count_subgraphs(PatternSpec.bipartite(q, t), g)
                cases.append((f"kqt{(q, t, s, r)}", kqt_projection_bound(n, q, t, s, r, m).value,
                              count_subgraphs(PatternSpec.bipartite(r, s), g)))
            if n >= 3:
                cases.append(("bollobas(2,3)", bollobas_interpolated_bound(n, 2, 3, edges).value, tri))
            if n >= 4:
                cases.append(("bollobas(2,4)", bollobas_interpolated_bound(n, 2, 4, edges).value,
                              count_subgraphs(PatternSpec.clique(4), g)))
                cases.append(("bollobas(3,4)", bollobas_interpolated_bound(n, 3, 4, tri).value,
                              count_subgraphs(PatternSpec.clique(4), g)))
            for name, bound, truth in cases:
                checks += 1
                if not _ok(bound, truth):
                    violations.append((n, g.to_graph6(), name, bound, truth))
    return checks, violations
