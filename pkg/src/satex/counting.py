"""Exact subgraph counting N(F, G) and its weighted and co-degree relatives.

A copy of F in G is an unlabeled, not necessarily induced subgraph, so
N(F, G) = (#injective edge-preserving maps V(F) -> V(G)) / |Aut(F)|.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from math import comb, prod
from typing import Iterator, Mapping

from .graph import Graph
from .patterns import PatternSpec


@dataclass(frozen=True)
class EdgeWeighting:
    """Nonnegative weights on the edges of one host graph, keyed by (u, v) with u < v."""

    weights: Mapping[tuple[int, int], float]

    @classmethod
    def uniform(cls, host: Graph, value: float = 1.0) -> "EdgeWeighting":
        return cls({e: value for e in host.edges()})

    @classmethod
    def from_pairs(cls, pairs: Mapping[tuple[int, int], float]) -> "EdgeWeighting":
        return cls({(min(u, v), max(u, v)): float(w) for (u, v), w in pairs.items()})

    def check(self, host: Graph) -> None:
        edges = set(host.edges())
        keys = set(self.weights)
        if keys != edges:
            missing, extra = edges - keys, keys - edges
            raise ValueError(f"weighting must cover exactly the edge set (missing {sorted(missing)}, extra {sorted(extra)})")
        for e, w in self.weights.items():
            if w < 0:
                raise ValueError(f"negative weight {w} on edge {e}")

    def __getitem__(self, e: tuple[int, int]) -> float:
        u, v = e
        return self.weights[(u, v) if u < v else (v, u)]


def _plan(p: Graph):
    """Vertex order for backtracking: each vertex follows as many of its
    neighbours as possible.  Returns (order, back) where back[i] lists the
    positions j < i adjacent to order[i]."""
    n = p.n
    degs = p.degrees()
    placed: list[int] = []
    rest = set(range(n))
    while rest:
        pmask = sum(1 << v for v in placed)
        v = max(rest, key=lambda x: ((p.adj[x] & pmask).bit_count(), degs[x], -x))
        placed.append(v)
        rest.remove(v)
    pos = {v: i for i, v in enumerate(placed)}
    back = [[pos[u] for u in placed[:i] if p.adj[v] >> u & 1] for i, v in enumerate(placed)]
    return placed, back


def _degree_masks(host: Graph, needed: set[int]) -> dict[int, int]:
    degs = host.degrees()
    return {d: sum(1 << v for v in range(host.n) if degs[v] >= d) for d in needed}


def count_injective_maps(pattern: Graph, host: Graph) -> int:
    """Number of injective maps V(pattern) -> V(host) sending edges to edges."""
    k = pattern.n
    if k == 0:
        return 1
    if k > host.n:
        return 0
    order, back = _plan(pattern)
    pdeg = pattern.degrees()
    dmask = _degree_masks(host, set(pdeg))
    allowed = [dmask[pdeg[v]] for v in order]
    adj = host.adj
    img = [0] * k
    last = k - 1

    def rec(i: int, used: int) -> int:
        cand = allowed[i] & ~used
        for j in back[i]:
            cand &= adj[img[j]]
        if i == last:
            return cand.bit_count()
        total = 0
        while cand:
            low = cand & -cand
            img[i] = low.bit_length() - 1
            total += rec(i + 1, used | low)
            cand ^= low
        return total

    return rec(0, 0)


def iter_injective_maps(pattern: Graph, host: Graph) -> Iterator[tuple[int, ...]]:
    """Yield every injective edge-preserving map as a tuple indexed by pattern vertex."""
    k = pattern.n
    if k > host.n:
        return
    if k == 0:
        yield ()
        return
    order, back = _plan(pattern)
    pdeg = pattern.degrees()
    dmask = _degree_masks(host, set(pdeg))
    allowed = [dmask[pdeg[v]] for v in order]
    adj = host.adj
    img = [0] * k

    def rec(i: int, used: int):
        cand = allowed[i] & ~used
        for j in back[i]:
            cand &= adj[img[j]]
        while cand:
            low = cand & -cand
            img[i] = low.bit_length() - 1
            if i == k - 1:
                out = [0] * k
                for pos, v in enumerate(order):
                    out[v] = img[pos]
                yield tuple(out)
            else:
                yield from rec(i + 1, used | low)
            cand ^= low

    yield from rec(0, 0)


def iter_copies(pattern: PatternSpec, host: Graph) -> Iterator[tuple[frozenset, frozenset]]:
    """Yield each copy once as (vertex set, edge set) in the host."""
    p = pattern.graph
    pedges = p.edges()
    seen = set()
    for phi in iter_injective_maps(p, host):
        key = (
            frozenset(phi),
            frozenset((min(phi[u], phi[v]), max(phi[u], phi[v])) for u, v in pedges),
        )
        if key not in seen:
            seen.add(key)
            yield key


def _falling(n: int, k: int) -> int:
    return prod(range(n - k + 1, n + 1)) if k <= n else 0


def count_cliques(host: Graph, k: int) -> int:
    if k == 0:
        return 1
    if k == 1:
        return host.n
    if k == 2:
        return host.edge_count()
    adj = host.adj

    def rec(cand: int, depth: int) -> int:
        if depth == 1:
            return cand.bit_count()
        total = 0
        while cand:
            low = cand & -cand
            cand ^= low
            nxt = cand & adj[low.bit_length() - 1]
            if nxt.bit_count() >= depth - 1:
                total += rec(nxt, depth - 1)
        return total

    return rec((1 << host.n) - 1, k)


def codegree_sum(host: Graph, a: int, b: int) -> int:
    """Sum over a-subsets A of C(d(A), b), where d(A) counts common neighbours."""
    n, adj = host.n, host.adj
    total = 0

    def rec(start: int, need: int, common: int):
        nonlocal total
        if need == 0:
            total += comb(common.bit_count(), b)
            return
        for v in range(start, n - need + 1):
            nxt = common & adj[v]
            if nxt.bit_count() >= b:
                rec(v + 1, need - 1, nxt)

    rec(0, a, (1 << n) - 1)
    return total


def codegree_vector(host: Graph, a: int) -> list[tuple[tuple[int, ...], int]]:
    """(A, d(A)) for every a-subset A of the vertices, in lexicographic order."""
    if not 1 <= a <= host.n:
        raise ValueError(f"set size must be in 1..{host.n}, got {a}")
    out = []
    full = (1 << host.n) - 1
    for A in combinations(range(host.n), a):
        common = full
        for v in A:
            common &= host.adj[v]
        out.append((A, common.bit_count()))
    return out


def count_subgraphs(pattern: PatternSpec, host: Graph) -> int:
    """N(pattern, host): the number of (not necessarily induced) copies."""
    k = pattern.num_vertices
    if k == 0:
        return 1
    if k > host.n:
        return 0
    if host.is_complete() or pattern.num_edges == 0:
        return _falling(host.n, k) // pattern.aut
    kind, params = pattern.kind, pattern.params
    if kind == "clique":
        return count_cliques(host, params[0])
    if kind == "star" or (kind == "path" and params[0] == 3):
        s = params[0] if kind == "star" else 2
        if s == 1:
            return host.edge_count()
        return sum(comb(d, s) for d in host.degrees())
    if kind == "path" and params[0] <= 2:
        return host.edge_count() if params[0] == 2 else host.n
    if kind == "bipartite":
        a, b = sorted(params)
        total = codegree_sum(host, a, b)
        return total // 2 if a == b else total
    if kind == "cycle" and params[0] == 3:
        return count_cliques(host, 3)
    if kind == "cycle" and params[0] == 4:
        return codegree_sum(host, 2, 2) // 2
    return count_injective_maps(pattern.graph, host) // pattern.aut


def count_weighted_subgraphs(pattern: PatternSpec, host: Graph, w: EdgeWeighting) -> float:
    """Sum over copies of the product of their edge weights."""
    w.check(host)
    p = pattern.graph
    pedges = p.edges()
    total = 0.0
    for phi in iter_injective_maps(p, host):
        total += prod(w[(phi[u], phi[v])] for u, v in pedges)
    # every copy is hit once per automorphism, always with the same weight
    return total / pattern.aut
