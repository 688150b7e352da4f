"""Simulated annealing over single edge toggles: a certified upper bound on
satex(n, F: m, G) for n beyond exhaustive reach."""

from __future__ import annotations

import math
import random
from dataclasses import dataclass

from .counting import count_subgraphs
from .families import quasi_clique, quasi_star, turan_graph
from .graph import Graph
from .patterns import PatternSpec
from .search import SearchResult


@dataclass(frozen=True)
class AnnealConfig:
    t0: float = 1.0
    cooling: float = 0.999
    restarts: int = 8
    t_min: float = 1e-3
    stagnation: int = 2000  # moves without improvement before a restart
    swap_prob: float = 0.5  # chance a move trades one edge for a non-edge


def local_search_satex(
    n: int,
    F: PatternSpec,
    m: int,
    G: PatternSpec,
    budget: int = 20000,
    seed: int = 0,
    config: AnnealConfig = AnnealConfig(),
) -> SearchResult:
    """Heuristic minimum of N(G, X) over n-vertex X with N(F, X) >= m.

    The first restart starts from the best structured candidate (Turan,
    quasi-clique and quasi-star members); later ones start from random graphs.
    Moves toggle one pair or swap an edge for a non-edge.
    The objective is lexicographic: first the shortfall max(0, m - N(F, X)),
    then N(G, X).  ``budget`` counts proposed moves over all restarts.  The
    returned witness is recounted before returning; ``exact`` is always False.
    """
    if budget <= 0:
        raise ValueError("budget must be positive")
    if m <= 0:
        empty = Graph.empty(n)
        return SearchResult(count_subgraphs(G, empty), empty, 1, False)

    top_g = count_subgraphs(G, Graph.complete(n))
    if m > count_subgraphs(F, Graph.complete(n)):
        return SearchResult(None, None, 0, False, feasible=False)
    # shortfall dominates: one missing copy of F outweighs every copy of G
    weight = top_g + 1
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    # typical energy change of one toggle, so the temperature is unit-free
    scale = max(1.0, top_g / max(1, len(pairs)))
    rng = random.Random(seed)

    def energy(g: Graph) -> tuple[int, int, int]:
        cf = count_subgraphs(F, g)
        cg = count_subgraphs(G, g)
        return weight * max(0, m - cf) + cg, cf, cg

    best_graph, best_g = None, None
    start, start_key = Graph.complete(n), None
    for cand in _structured_candidates(n):
        cf, cg = count_subgraphs(F, cand), count_subgraphs(G, cand)
        key = (max(0, m - cf), cg)
        if start_key is None or key < start_key:
            start, start_key = cand, key
        if cf >= m and (best_g is None or cg < best_g):
            best_graph, best_g = cand, cg
    explored = 0
    per_restart = max(1, budget // max(1, config.restarts))
    restart = 0
    while explored < budget:
        if restart == 0:
            g = start
        else:
            density = rng.random()
            g = Graph.from_edges(n, [e for e in pairs if rng.random() < density])
        restart += 1
        e_cur, cf, cg = energy(g)
        if cf >= m and (best_g is None or cg < best_g):
            best_graph, best_g = g, cg
        temp = config.t0
        since_improve = 0
        local_best = e_cur
        for _ in range(per_restart):
            if explored >= budget or not pairs:
                break
            explored += 1
            u, v = pairs[rng.randrange(len(pairs))]
            h = g.toggle_edge(u, v)
            if rng.random() < config.swap_prob:
                # pair the toggle with one of the opposite kind
                want = not g.has_edge(u, v)
                opposite = [e for e in pairs if g.has_edge(*e) == want]
                if opposite:
                    h = h.toggle_edge(*opposite[rng.randrange(len(opposite))])
            e_new, cf_new, cg_new = energy(h)
            delta = (e_new - e_cur) / scale
            if delta <= 0 or rng.random() < math.exp(-delta / max(temp, config.t_min)):
                g, e_cur = h, e_new
                if cf_new >= m and (best_g is None or cg_new < best_g):
                    best_graph, best_g = g, cg_new
            if e_cur < local_best:
                local_best = e_cur
                since_improve = 0
            else:
                since_improve += 1
                if since_improve >= config.stagnation:
                    break
            temp *= config.cooling

    if best_graph is None:
        return SearchResult(None, None, explored, False, feasible=False)
    # re-verify before handing out a certificate
    if count_subgraphs(F, best_graph) < m or count_subgraphs(G, best_graph) != best_g:
        raise RuntimeError("local search witness failed re-verification")
    return SearchResult(best_g, best_graph, explored, False)


def _structured_candidates(n: int):
    for q in range(1, n + 1):
        yield turan_graph(q, n)
    for t in range(n + 1):
        yield quasi_clique(t, n)
        yield quasi_star(t, n)
