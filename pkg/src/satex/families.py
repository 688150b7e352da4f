"""Extremal graph families: quasi-cliques, quasi-stars, Turan graphs, complete
bipartite graphs, Furedi graphs H(p, r) and orthogonal-polarity graphs."""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from math import comb, prod

from .graph import Graph
from .patterns import PatternSpec

FAMILY_PARAMS = {
    "quasi_clique": ("t",),
    "quasi_star": ("t",),
    "turan": ("q",),
    "complete_bipartite": ("a",),
    "furedi": ("p", "r"),
    "polarity": ("q",),
}


class FamilyError(ValueError):
    pass


def is_prime(p: int) -> bool:
    if p < 2:
        return False
    i = 2
    while i * i <= p:
        if p % i == 0:
            return False
        i += 1
    return True


@dataclass(frozen=True)
class FamilySpec:
    family: str
    params: dict = field(default_factory=dict)

    def __post_init__(self):
        if self.family not in FAMILY_PARAMS:
            raise FamilyError(f"unknown family {self.family!r}; choose from {sorted(FAMILY_PARAMS)}")
        want = set(FAMILY_PARAMS[self.family])
        if set(self.params) != want:
            raise FamilyError(f"{self.family} takes parameters {sorted(want)}, got {sorted(self.params)}")
        for k, v in self.params.items():
            if not isinstance(v, int) or isinstance(v, bool):
                raise FamilyError(f"parameter {k} must be an integer")

    def __hash__(self):
        return hash((self.family, tuple(sorted(self.params.items()))))

    def forced_n(self) -> int | None:
        """Vertex count fixed by the parameters, if any."""
        if self.family == "furedi":
            p, r = self.params["p"], self.params["r"]
            return p * (p - 1) // r
        if self.family == "polarity":
            q = self.params["q"]
            return q * q + q + 1
        return None

    def to_json(self) -> dict:
        return {"family": self.family, "params": dict(self.params)}

    @classmethod
    def from_json(cls, obj: dict | str) -> "FamilySpec":
        if isinstance(obj, str):
            obj = json.loads(obj)
        try:
            return cls(obj["family"], {k: int(v) for k, v in obj.get("params", {}).items()})
        except (KeyError, TypeError, ValueError) as exc:
            raise FamilyError(f"bad family JSON: {exc}") from exc


def quasi_clique(t: int, n: int) -> Graph:
    """K_t*(n): a clique on vertices 0..t-1 and n - t isolated vertices."""
    if not 0 <= t <= n:
        raise FamilyError(f"need 0 <= t <= n, got t={t}, n={n}")
    return Graph.complete(t).disjoint_union(Graph.empty(n - t))


def quasi_star(t: int, n: int) -> Graph:
    """Complement of K_t*(n): independent set 0..t-1 joined to a clique on the rest."""
    return quasi_clique(t, n).complement()


def turan_part_sizes(q: int, n: int) -> list[int]:
    return [n // q + (1 if i < n % q else 0) for i in range(q)]


def turan_graph(q: int, n: int) -> Graph:
    if not 1 <= q <= n:
        raise FamilyError(f"need 1 <= q <= n, got q={q}, n={n}")
    part = []
    for i, size in enumerate(turan_part_sizes(q, n)):
        part += [i] * size
    return Graph.from_edges(n, ((u, v) for u, v in combinations(range(n), 2) if part[u] != part[v]))


def complete_bipartite(a: int, n: int) -> Graph:
    if not 0 <= a <= n:
        raise FamilyError(f"need 0 <= a <= n, got a={a}, n={n}")
    return Graph.complete_bipartite(a, n - a)


def furedi_graph(p: int, r: int) -> Graph:
    """K_{2,r+1}-free graph on p(p-1)/r vertices.

    Vertices are the classes of pairs (a, b) in Z_p x Z_p with b != 0 under
    scaling by the order-r subgroup H of Z_p^*; (a, b) ~ (c, d) when
    ad + bc lies in H.  Self-adjacent classes lose their loop, which leaves
    p - 1 vertices of degree p - 2 and the rest of degree p - 1.
    """
    if not is_prime(p) or p == 2:
        raise FamilyError(f"p must be an odd prime, got {p}")
    if r < 1 or (p - 1) % r:
        raise FamilyError(f"r must divide p - 1 = {p - 1}, got {r}")
    g = _primitive_root(p)
    H = sorted(pow(g, (p - 1) // r * i, p) for i in range(r))
    Hset = set(H)
    reps: dict[tuple[int, int], int] = {}
    classes: list[tuple[int, int]] = []
    for a in range(p):
        for b in range(1, p):
            rep = min(((h * a) % p, (h * b) % p) for h in H)
            if rep not in reps:
                reps[rep] = len(classes)
                classes.append(rep)
    edges = [
        (i, j)
        for i, j in combinations(range(len(classes)), 2)
        if (classes[i][0] * classes[j][1] + classes[i][1] * classes[j][0]) % p in Hset
    ]
    return Graph.from_edges(len(classes), edges)


def _primitive_root(p: int) -> int:
    factors = {q for q in range(2, p) if (p - 1) % q == 0 and is_prime(q)}
    for g in range(2, p):
        if all(pow(g, (p - 1) // q, p) != 1 for q in factors):
            return g
    return 1  # p == 2


def projective_points(q: int) -> list[tuple[int, int, int]]:
    """Normalised points of PG(2, q), first nonzero coordinate equal to 1."""
    pts = [(1, y, z) for y in range(q) for z in range(q)]
    pts += [(0, 1, z) for z in range(q)]
    pts.append((0, 0, 1))
    return pts


def polarity_graph(q: int) -> Graph:
    """Erdos-Renyi orthogonal-polarity graph on the q^2 + q + 1 points of PG(2, q),
    with loops at absolute points dropped."""
    if not is_prime(q):
        raise FamilyError(f"only prime q is supported, got {q}")
    pts = projective_points(q)
    edges = [
        (i, j)
        for i, j in combinations(range(len(pts)), 2)
        if sum(x * y for x, y in zip(pts[i], pts[j])) % q == 0
    ]
    return Graph.from_edges(len(pts), edges)


def build_family(spec: FamilySpec, n: int | None = None) -> Graph:
    P = spec.params
    forced = spec.forced_n()
    if forced is not None:
        if n is not None and n != forced:
            raise FamilyError(f"{spec.family}{tuple(P.values())} has exactly {forced} vertices, not {n}")
        if spec.family == "furedi":
            return furedi_graph(P["p"], P["r"])
        return polarity_graph(P["q"])
    if n is None:
        raise FamilyError(f"{spec.family} needs a vertex count")
    if spec.family == "quasi_clique":
        return quasi_clique(P["t"], n)
    if spec.family == "quasi_star":
        if not 0 <= P["t"] <= n:
            raise FamilyError(f"need 0 <= t <= n, got t={P['t']}, n={n}")
        return quasi_star(P["t"], n)
    if spec.family == "turan":
        return turan_graph(P["q"], n)
    return complete_bipartite(P["a"], n)


def turan_clique_count(q: int, n: int, k: int) -> int:
    """t(q, n, k): copies of K_k in the balanced complete q-partite graph on n vertices."""
    if q < 1 or k < 0:
        raise FamilyError("need q >= 1 and k >= 0")
    sizes = turan_part_sizes(q, n) if q <= n else [1] * n + [0] * (q - n)
    # elementary symmetric polynomial e_k of the part sizes
    e = [1] + [0] * k
    for s in sizes:
        for j in range(k, 0, -1):
            e[j] += e[j - 1] * s
    return e[k]


# Table of main terms for path counts P_k (k vertices) in the three families,
# parameterised by the density lambda in (0, 1].
MAIN_TERM_FAMILIES = ("clique", "quasi_star", "bipartite")
MAIN_TERM_ROWS = ("main", "small_lambda", "lambda_near_one")


@dataclass(frozen=True)
class MainTermQuery:
    """``family`` is the clique K_{lam n}, the quasi-star (complement of
    K*_{(1-lam) n}, i.e. a clique on lam*n vertices joined to an independent
    (1-lam)*n set) or the bipartite K_{lam n, (1-lam) n}."""

    lam: Fraction | float
    pattern: PatternSpec
    family: str
    row: str = "main"

    def __post_init__(self):
        if not 0 < self.lam <= 1:
            raise ValueError(f"lambda must lie in (0, 1], got {self.lam}")
        if self.family not in MAIN_TERM_FAMILIES:
            raise ValueError(f"family must be one of {MAIN_TERM_FAMILIES}")
        if self.row not in MAIN_TERM_ROWS:
            raise ValueError(f"row must be one of {MAIN_TERM_ROWS}")
        if self.pattern.kind not in ("path", "star") or self.pattern.params[0] < 2:
            raise NotImplementedError(f"main terms are tabulated for paths only, not {self.pattern}")


def closed_form_main_term(query: MainTermQuery, n: float) -> float:
    if query.pattern.kind != "path":
        raise NotImplementedError("main terms are tabulated for paths only")
    k = query.pattern.params[0]
    lam = query.lam
    mu = 1 - lam
    fam, row = query.family, query.row
    if fam == "clique" or (fam == "quasi_star" and row == "lambda_near_one"):
        return (lam * n) ** k / 2
    if fam == "quasi_star":
        if row == "main":
            # t = vertices of the path drawn from the independent side; they
            # occupy pairwise non-adjacent slots among k
            s = sum(lam ** (k - t) * mu ** t * comb(k - t + 1, t) for t in range(0, (k + 1) // 2 + 1))
            return s * n ** k / 2
        if k % 2 == 0:
            return (k / 2 + 1) * lam ** (k // 2) * n ** k / 2
        return lam ** ((k - 1) // 2) * n ** k / 2
    if row == "lambda_near_one":
        raise NotImplementedError("no near-one row is tabulated for the bipartite family")
    if row == "small_lambda":
        if k % 2 == 0:
            return lam ** (k // 2) * n ** k
        return lam ** ((k - 1) // 2) * n ** k / 2
    if k % 2 == 0:
        return (lam * mu) ** (k // 2) * n ** k
    return (lam * mu) ** ((k - 1) // 2) * n ** k / 2


def main_term_host(query: MainTermQuery, n: int) -> Graph:
    """The finite graph whose exact path count the main term approximates;
    lam * n must be an integer."""
    size = query.lam * n
    if size != int(size):
        raise ValueError(f"lambda * n = {size} is not an integer")
    size = int(size)
    if query.family == "clique":
        return quasi_clique(size, n)
    if query.family == "quasi_star":
        return quasi_star(n - size, n)
    return complete_bipartite(size, n)
