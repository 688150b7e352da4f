"""Canonical labeling by equitable-partition refinement plus individualization,
with automorphism pruning of the search tree.

The canonical form is the relabeled graph with the largest certificate among
the leaves of the search tree.  Automorphisms found on the way are kept as
generators, so vertex orbits come for free.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import permutations

from .graph import Graph


def _mask(cell) -> int:
    m = 0
    for v in cell:
        m |= 1 << v
    return m


def refine(adj, cells: list[tuple[int, ...]]) -> list[tuple[int, ...]]:
    """Coarsest equitable refinement of an ordered partition.

    Cells split by the vector of neighbour counts into every current cell;
    sub-cells are ordered by that vector, so the result is label-invariant.
    """
    while True:
        masks = [_mask(c) for c in cells]
        out = []
        changed = False
        for c in cells:
            if len(c) == 1:
                out.append(c)
                continue
            sigs = [tuple((adj[v] & m).bit_count() for m in masks) for v in c]
            first = sigs[0]
            if all(s == first for s in sigs):
                out.append(c)
                continue
            changed = True
            for key in sorted(set(sigs)):
                out.append(tuple(v for v, s in zip(c, sigs) if s == key))
        cells = out
        if not changed:
            return cells


def certificate(adj, lab) -> int:
    """Integer encoding of the graph relabeled so that lab[i] becomes vertex i."""
    n = len(lab)
    pos = [0] * n
    for i, v in enumerate(lab):
        pos[v] = i
    cert = 0
    for i, v in enumerate(lab):
        row = 0
        r = adj[v]
        while r:
            low = r & -r
            row |= 1 << pos[low.bit_length() - 1]
            r ^= low
        cert |= row << (n * i)
    return cert


@dataclass(frozen=True)
class CanonResult:
    cert: int
    labeling: tuple[int, ...]  # labeling[i] = original vertex placed at position i
    generators: tuple[tuple[int, ...], ...]
    orbits: tuple[int, ...]  # orbits[v] = smallest vertex in the orbit of v

    def canonical_graph(self, g: Graph) -> Graph:
        perm = [0] * g.n
        for i, v in enumerate(self.labeling):
            perm[v] = i
        return g.relabel(perm)

    @property
    def group_order_hint(self) -> int:
        return len(self.generators)


def _orbits(n: int, gens) -> list[int]:
    parent = list(range(n))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for g in gens:
        for x in range(n):
            a, b = find(x), find(g[x])
            if a != b:
                if a < b:
                    parent[b] = a
                else:
                    parent[a] = b
    return [find(x) for x in range(n)]


class _Search:
    def __init__(self, adj, n):
        self.adj = adj
        self.n = n
        self.first = None  # (lab, cert, prefix)
        self.best = None
        self.gens: list[tuple[int, ...]] = []

    def _leaf(self, cells, prefix):
        lab = tuple(c[0] for c in cells)
        cert = certificate(self.adj, lab)
        if self.first is None:
            self.first = self.best = (lab, cert, tuple(prefix))
            return None
        flab, fcert, fprefix = self.first
        if cert == fcert:
            self._add_gen(flab, lab)
            common = 0
            for a, b in zip(prefix, fprefix):
                if a != b:
                    break
                common += 1
            return common
        blab, bcert, _ = self.best
        if cert > bcert:
            self.best = (lab, cert, tuple(prefix))
        elif cert == bcert:
            self._add_gen(blab, lab)
        return None

    def _add_gen(self, src, dst):
        g = [0] * self.n
        for a, b in zip(src, dst):
            g[a] = b
        g = tuple(g)
        if any(g[x] != x for x in range(self.n)):
            self.gens.append(g)

    def run(self, cells, prefix):
        depth = len(prefix)
        target = None
        for idx, c in enumerate(cells):
            if len(c) > 1 and (target is None or len(c) < len(cells[target])):
                target = idx
        if target is None:
            return self._leaf(cells, prefix)
        cell = cells[target]
        explored: list[int] = []
        for v in cell:
            if explored:
                fixing = [g for g in self.gens if all(g[x] == x for x in prefix)]
                if fixing:
                    orb = _orbits(self.n, fixing)
                    if any(orb[v] == orb[w] for w in explored):
                        continue
            explored.append(v)
            child = cells[:target] + [(v,), tuple(x for x in cell if x != v)] + cells[target + 1:]
            r = self.run(refine(self.adj, child), prefix + [v])
            if r is not None and r < depth:
                return r
        return None


def canonical_labeling(g: Graph, initial: list[tuple[int, ...]] | None = None) -> CanonResult:
    """Canonical labeling of ``g``; ``initial`` optionally fixes an ordered vertex colouring."""
    n = g.n
    if n == 0:
        return CanonResult(0, (), (), ())
    cells = initial if initial is not None else [tuple(range(n))]
    s = _Search(g.adj, n)
    s.run(refine(g.adj, cells), [])
    lab, cert, _ = s.best
    gens = tuple(s.gens)
    return CanonResult(cert, lab, gens, tuple(_orbits(n, gens)))


def canonical_form(g: Graph) -> Graph:
    return canonical_labeling(g).canonical_graph(g)


def naive_canonical_cert(g: Graph) -> int:
    """Maximum certificate over all n! labelings; oracle for small n."""
    return max(certificate(g.adj, lab) for lab in permutations(range(g.n)))


def naive_automorphisms(g: Graph) -> list[tuple[int, ...]]:
    out = []
    for perm in permutations(range(g.n)):
        if all(g.adj[perm[v]] == sum(1 << perm[u] for u in range(g.n) if g.adj[v] >> u & 1) for v in range(g.n)):
            out.append(perm)
    return out
