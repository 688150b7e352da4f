"""Uniform hypergraphs and the three ways of counting Berge copies of a graph.

Given a copy of F in the shadow graph, an *extension* is an injective map
from its edges to hyperedges with each edge contained in its image.

* ``n3`` counts (copy, extension) pairs,
* ``n2`` counts shadow copies that have at least one extension,
* ``n1`` counts distinct hyperedge sets that arise as images.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from itertools import combinations, product
from math import comb

from .canon import canonical_labeling
from .counting import iter_copies
from .graph import Graph
from .patterns import PatternSpec
from .search import SizeRefusal, exact_satex

MAX_PATTERN_EDGES = 12
MAX_BRUTE_CANDIDATES = 500_000


class HypergraphError(ValueError):
    pass


@dataclass(frozen=True)
class Hypergraph:
    n: int
    r: int
    edges: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        if self.n < 0 or self.r < 1:
            raise HypergraphError("need n >= 0 and r >= 1")
        norm = []
        for e in self.edges:
            t = tuple(sorted(e))
            if len(t) != self.r or len(set(t)) != self.r:
                raise HypergraphError(f"hyperedge {e} does not have {self.r} distinct vertices")
            if t[0] < 0 or t[-1] >= self.n:
                raise HypergraphError(f"hyperedge {e} has a vertex outside 0..{self.n - 1}")
            norm.append(t)
        if len(set(norm)) != len(norm):
            raise HypergraphError("duplicate hyperedge")
        object.__setattr__(self, "edges", tuple(norm))

    @classmethod
    def complete(cls, n: int, r: int) -> "Hypergraph":
        return cls(n, r, tuple(combinations(range(n), r)))

    def to_json(self) -> dict:
        return {"n": self.n, "r": self.r, "edges": [list(e) for e in self.edges]}

    @classmethod
    def from_json(cls, obj: dict | str) -> "Hypergraph":
        if isinstance(obj, str):
            obj = json.loads(obj)
        try:
            return cls(int(obj["n"]), int(obj["r"]), tuple(tuple(e) for e in obj["edges"]))
        except (KeyError, TypeError) as exc:
            raise HypergraphError(f"malformed hypergraph JSON: {exc}") from exc


def berge_gadget(n: int) -> Hypergraph:
    """3n + 3 vertices a, b, c, x_i, y_i, z_i with hyperedges abx_i, acy_i, bcz_i.

    Vertices 0, 1, 2 are a, b, c; x_i, y_i, z_i are 3 + i, 3 + n + i, 3 + 2n + i.
    Only the shadow triangle abc extends to a Berge triangle, and it does so
    in n^3 ways.
    """
    if n < 1:
        raise HypergraphError("gadget needs n >= 1")
    a, b, c = 0, 1, 2
    edges = []
    for i in range(n):
        edges += [(a, b, 3 + i), (a, c, 3 + n + i), (b, c, 3 + 2 * n + i)]
    return Hypergraph(3 * n + 3, 3, tuple(edges))


def shadow_graph(H: Hypergraph) -> Graph:
    pairs = {p for e in H.edges for p in combinations(e, 2)}
    return Graph.from_edges(H.n, sorted(pairs))


@dataclass(frozen=True)
class BergeCounts:
    n1: int
    n2: int
    n3: int

    def as_tuple(self) -> tuple[int, int, int]:
        return self.n1, self.n2, self.n3


def _containing(H: Hypergraph) -> dict[tuple[int, int], int]:
    """Shadow edge -> bitmask of hyperedge indices containing it."""
    out: dict[tuple[int, int], int] = {}
    for idx, e in enumerate(H.edges):
        for p in combinations(e, 2):
            out[p] = out.get(p, 0) | (1 << idx)
    return out


def _extensions(options: list[int]) -> dict[int, int]:
    """Image bitmask -> number of injective choices producing it."""
    states = {0: 1}
    for opts in options:
        nxt: dict[int, int] = {}
        for used, ways in states.items():
            free = opts & ~used
            while free:
                low = free & -free
                key = used | low
                nxt[key] = nxt.get(key, 0) + ways
                free ^= low
        states = nxt
        if not states:
            break
    return states


def berge_counts(H: Hypergraph, F: PatternSpec) -> BergeCounts:
    k = F.num_edges
    if k > MAX_PATTERN_EDGES:
        raise SizeRefusal(f"pattern has {k} edges; Berge counting is limited to {MAX_PATTERN_EDGES}")
    if k > len(H.edges):
        return BergeCounts(0, 0, 0)
    contain = _containing(H)
    images: set[int] = set()
    n2 = n3 = 0
    for _, edges in iter_copies(F, shadow_graph(H)):
        ext = _extensions([contain[e] for e in sorted(edges)])
        total = sum(ext.values())
        if total:
            n2 += 1
            n3 += total
            images.update(ext)
    return BergeCounts(len(images), n2, n3)


def berge_counts_naive(H: Hypergraph, F: PatternSpec) -> BergeCounts:
    """Direct enumeration of every map; oracle for small instances."""
    images = set()
    n2 = n3 = 0
    for _, edges in iter_copies(F, shadow_graph(H)):
        edges = sorted(edges)
        cands = [[i for i, h in enumerate(H.edges) if set(e) <= set(h)] for e in edges]
        found = 0
        for choice in product(*cands):
            if len(set(choice)) == len(choice):
                found += 1
                images.add(frozenset(choice))
        n2 += found > 0
        n3 += found
    return BergeCounts(len(images), n2, n3)


@dataclass
class BergeSearchResult:
    optimum: int | None
    witness: Hypergraph | None
    explored: int
    exact: bool = True
    feasible: bool = True

    def to_json(self) -> dict:
        return {
            "optimum": self.optimum,
            "witness": self.witness.to_json() if self.witness is not None else None,
            "explored": self.explored,
            "exact": self.exact,
            "feasible": self.feasible,
        }


def _hypergraph_cert(n: int, edges) -> int:
    # incidence graph with vertices and hyperedges in separate colour classes
    m = len(edges)
    pairs = [(v, n + i) for i, e in enumerate(edges) for v in e]
    inc = Graph.from_edges(n + m, pairs)
    return canonical_labeling(inc, [tuple(range(n)), tuple(range(n, n + m))]).cert


def brute_satex_berge(
    n: int,
    r: int,
    m: int,
    F: PatternSpec,
    i: int,
    prune_isomorphs: bool = False,
    force: bool = False,
) -> BergeSearchResult:
    """min N_i(H, Berge-F) over r-uniform H on n vertices with exactly m hyperedges."""
    if i not in (1, 2, 3):
        raise ValueError("i must be 1, 2 or 3")
    slots = list(combinations(range(n), r))
    if not 0 <= m <= len(slots):
        return BergeSearchResult(None, None, 0, feasible=False)
    if comb(len(slots), m) > MAX_BRUTE_CANDIDATES and not force:
        raise SizeRefusal(
            f"{comb(len(slots), m)} candidate hypergraphs exceed the limit of {MAX_BRUTE_CANDIDATES}"
        )
    seen: set[int] = set()
    best = None
    explored = 0
    for chosen in combinations(slots, m):
        if prune_isomorphs:
            cert = _hypergraph_cert(n, chosen)
            if cert in seen:
                continue
            seen.add(cert)
        explored += 1
        H = Hypergraph(n, r, chosen)
        value = berge_counts(H, F).as_tuple()[i - 1]
        # first minimum in lexicographic edge order wins ties
        if best is None or value < best[0]:
            best = (value, H)
            if value == 0:
                break
    return BergeSearchResult(best[0], best[1], explored)


@dataclass
class SandwichReport:
    n: int
    r: int
    m: int
    pattern: str
    satex_clique: int  # satex(n, K_r: m, F)
    satex_1: int
    satex_2: int
    satex_shifted: int  # satex(n, K_r: max(0, m - C(n,2)), F)
    checks: dict[str, bool] = field(default_factory=dict)
    margins: dict[str, int] = field(default_factory=dict)

    @property
    def holds(self) -> bool:
        return all(self.checks.values())

    def to_json(self) -> dict:
        return {
            "n": self.n, "r": self.r, "m": self.m, "pattern": self.pattern,
            "satex_clique": self.satex_clique, "satex_1": self.satex_1,
            "satex_2": self.satex_2, "satex_shifted": self.satex_shifted,
            "checks": self.checks, "margins": self.margins, "holds": self.holds,
        }


def berge_sandwich_check(n: int, r: int, m: int, F: PatternSpec) -> SandwichReport:
    """Compare exact Berge minima with graph minima under the clique/hyperedge swap:

    satex(n, K_r: m, F) >= satex_2 >= satex(n, K_r: m - C(n,2), F), and
    satex_1 >= satex(n, K_r: m - C(n,2), F).
    """
    if not 0 <= m <= comb(n, r):
        raise ValueError(f"m={m} is not a feasible hyperedge count for n={n}, r={r}")
    Kr = PatternSpec.clique(r)
    top = exact_satex(n, Kr, m, F).optimum
    low = exact_satex(n, Kr, max(0, m - comb(n, 2)), F).optimum
    s1 = brute_satex_berge(n, r, m, F, 1).optimum
    s2 = brute_satex_berge(n, r, m, F, 2).optimum
    margins = {"clique_vs_2": top - s2, "2_vs_shifted": s2 - low, "1_vs_shifted": s1 - low}
    checks = {k: v >= 0 for k, v in margins.items()}
    return SandwichReport(n, r, m, F.name, top, s1, s2, low, checks, margins)
