"""Ground truth at desk scale: isomorph-free enumeration and exact
satex / generalized Turan values by exhaustive scan."""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator

from .canon import canonical_labeling, certificate, refine
from .counting import count_subgraphs
from .graph import Graph
from .patterns import PatternSpec

# number of isomorphism classes of graphs on n vertices
KNOWN_CLASS_COUNTS = (1, 1, 2, 4, 11, 34, 156, 1044, 12346, 274668)
MAX_ENUMERATION_N = 9


class SizeRefusal(ValueError):
    """Raised when a request exceeds what exhaustive search can do."""


@dataclass
class SearchResult:
    optimum: int | None
    witness: Graph | None
    explored: int
    exact: bool
    feasible: bool = True

    def to_json(self) -> dict:
        return {
            "optimum": self.optimum,
            "witness": self.witness.to_graph6() if self.witness is not None else None,
            "explored": self.explored,
            "exact": self.exact,
            "feasible": self.feasible,
        }


def _children(parent: Graph, lo: int | None = None, hi: int | None = None) -> list[Graph]:
    """Canonical augmentation: extend ``parent`` by one vertex in every way,
    keeping a child only if the new vertex lies in the orbit of the child's
    canonical deletion vertex.  Siblings are deduplicated by certificate."""
    n = parent.n
    e0 = parent.edge_count()
    seen: set[int] = set()
    out = []
    for S in range(1 << n):
        e = e0 + S.bit_count()
        if (lo is not None and e < lo) or (hi is not None and e > hi):
            continue
        child = parent.add_vertex(S)
        cells = refine(child.adj, [tuple(range(n + 1))])
        # the deletion vertex always comes from the first refined cell
        if n not in cells[0]:
            continue
        res = canonical_labeling(child, cells)
        if res.orbits[n] != res.orbits[res.labeling[0]]:
            continue
        if res.cert in seen:
            continue
        seen.add(res.cert)
        out.append(res.canonical_graph(child))
    return out


def _expand(args):
    parents, lo, hi = args
    return [g for p in parents for g in _children(p, lo, hi)]


@lru_cache(maxsize=None)
def _level(n: int) -> tuple[Graph, ...]:
    if n == 0:
        return (Graph.empty(0),)
    return tuple(g for p in _level(n - 1) for g in _children(p))


def _check_size(n: int, force: bool = False) -> None:
    if n < 0:
        raise ValueError("n must be nonnegative")
    if n > MAX_ENUMERATION_N and not force:
        raise SizeRefusal(
            f"exhaustive enumeration is limited to n <= {MAX_ENUMERATION_N}; "
            "use local_search_satex for larger n"
        )


def enumerate_nonisomorphic_graphs(
    n: int,
    edge_bounds: tuple[int, int] | None = None,
    workers: int = 1,
    force: bool = False,
) -> Iterator[Graph]:
    """Yield one canonical representative per isomorphism class on ``n`` vertices,
    optionally only those with ``lo <= |E| <= hi``.  Output order does not
    depend on ``workers``."""
    _check_size(n, force)
    lo, hi = edge_bounds if edge_bounds is not None else (None, None)
    if n == 0:
        if lo is None or lo <= 0 <= hi:
            yield Graph.empty(0)
        return
    if edge_bounds is None and n <= 8:
        yield from _level(n)
        return
    parents = _level(n - 1)
    if workers <= 1:
        for p in parents:
            yield from _children(p, lo, hi)
        return
    chunk = max(1, len(parents) // (workers * 8))
    batches = [(parents[i:i + chunk], lo, hi) for i in range(0, len(parents), chunk)]
    with ProcessPoolExecutor(max_workers=workers) as pool:
        for graphs in pool.map(_expand, batches):
            yield from graphs


_TABLES: dict[int, tuple[tuple[Graph, ...], tuple[int, ...]]] = {}


def _table(n: int, workers: int = 1) -> tuple[tuple[Graph, ...], tuple[int, ...]]:
    if n not in _TABLES:
        graphs = tuple(enumerate_nonisomorphic_graphs(n, workers=workers, force=True))
        # representatives are already canonical, so the identity labeling is the best leaf
        certs = tuple(certificate(g.adj, range(g.n)) for g in graphs)
        _TABLES[n] = (graphs, certs)
    return _TABLES[n]


@lru_cache(maxsize=None)
def _counts(n: int, pattern: PatternSpec) -> tuple[int, ...]:
    graphs, _ = _table(n)
    return tuple(count_subgraphs(pattern, g) for g in graphs)


def exact_satex(
    n: int, F: PatternSpec, m: int, G: PatternSpec, force: bool = False, workers: int = 1
) -> SearchResult:
    """min N(G, X) over n-vertex graphs X with N(F, X) >= m."""
    _check_size(n, force)
    graphs, certs = _table(n, workers)
    if m > count_subgraphs(F, Graph.complete(n)):
        return SearchResult(None, None, len(graphs), True, feasible=False)
    cf, cg = _counts(n, F), _counts(n, G)
    best = None
    for i in range(len(graphs)):
        if cf[i] >= m:
            key = (cg[i], certs[i])
            if best is None or key < best[0]:
                best = (key, i)
    (value, _), i = best
    return SearchResult(value, graphs[i], len(graphs), True)


def exact_generalized_turan(
    n: int, F: PatternSpec, G: PatternSpec, force: bool = False, workers: int = 1
) -> SearchResult:
    """ex(n, F, G): max N(F, X) over G-free n-vertex graphs X."""
    _check_size(n, force)
    graphs, certs = _table(n, workers)
    cf, cg = _counts(n, F), _counts(n, G)
    best = None
    for i in range(len(graphs)):
        if cg[i] == 0:
            key = (-cf[i], certs[i])
            if best is None or key < best[0]:
                best = (key, i)
    (neg, _), i = best
    return SearchResult(-neg, graphs[i], len(graphs), True)


def satex_profile(n: int, F: PatternSpec, G: PatternSpec, force: bool = False) -> list[int]:
    """exact satex(n, F: m, G) for every m in 0..N(F, K_n), in one pass."""
    _check_size(n, force)
    graphs, _ = _table(n)
    top = count_subgraphs(F, Graph.complete(n))
    cf, cg = _counts(n, F), _counts(n, G)
    best = [None] * (top + 1)
    for a, b in zip(cf, cg):
        if best[a] is None or b < best[a]:
            best[a] = b
    # satex(m) = min over graphs with count >= m: suffix minimum
    out = [0] * (top + 1)
    running = None
    for m in range(top, -1, -1):
        if best[m] is not None and (running is None or best[m] < running):
            running = best[m]
        out[m] = running
    return out


def max_copies(pattern: PatternSpec, n: int) -> int:
    return count_subgraphs(pattern, Graph.complete(n))


def isomorphism_class_count(n: int) -> int:
    return sum(1 for _ in enumerate_nonisomorphic_graphs(n))

