"""Named pattern graphs F, G used as the objects being counted.

Paths and cycles are indexed by their number of VERTICES: ``Path(3)`` is the
cherry (two edges), ``Cycle(4)`` is the quadrilateral.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from functools import cached_property
from math import factorial

from .graph import Graph, GraphError

KINDS = ("clique", "bipartite", "star", "path", "cycle", "explicit")


class PatternError(ValueError):
    pass


@dataclass(frozen=True)
class PatternSpec:
    kind: str
    params: tuple[int, ...] = ()
    explicit: Graph | None = field(default=None, compare=True)

    def __post_init__(self):
        if self.kind not in KINDS:
            raise PatternError(f"unknown pattern kind {self.kind!r}")
        if self.kind == "explicit":
            if self.explicit is None:
                raise PatternError("explicit pattern needs a graph")
        elif any(p < 0 for p in self.params):
            raise PatternError(f"negative parameter in {self.kind}{self.params}")
        if self.kind == "cycle" and self.params[0] < 3:
            raise PatternError("cycle needs at least 3 vertices")

    # constructors mirror the usual notation
    @classmethod
    def clique(cls, k: int) -> "PatternSpec":
        return cls("clique", (k,))

    @classmethod
    def bipartite(cls, a: int, b: int) -> "PatternSpec":
        return cls("bipartite", (a, b))

    @classmethod
    def star(cls, s: int) -> "PatternSpec":
        return cls("star", (s,))

    @classmethod
    def path(cls, k: int) -> "PatternSpec":
        return cls("path", (k,))

    @classmethod
    def cycle(cls, k: int) -> "PatternSpec":
        return cls("cycle", (k,))

    @classmethod
    def from_graph(cls, g: Graph) -> "PatternSpec":
        return cls("explicit", (), g)

    @cached_property
    def graph(self) -> Graph:
        k = self.params[0] if self.params else 0
        if self.kind == "clique":
            return Graph.complete(k)
        if self.kind == "bipartite":
            return Graph.complete_bipartite(*self.params)
        if self.kind == "star":
            return Graph.star(k)
        if self.kind == "path":
            return Graph.path(k)
        if self.kind == "cycle":
            return Graph.cycle(k)
        return self.explicit

    @property
    def num_vertices(self) -> int:
        return self.graph.n

    @property
    def num_edges(self) -> int:
        return self.graph.edge_count()

    @cached_property
    def aut(self) -> int:
        """Order of the automorphism group."""
        k = self.params[0] if self.params else 0
        if self.kind == "clique":
            return factorial(k)
        if self.kind == "path":
            return 2 if k >= 2 else 1
        if self.kind == "cycle":
            return 2 * k
        if self.kind == "bipartite":
            a, b = self.params
            if a == b:
                return 2 * factorial(a) ** 2
            return factorial(a) * factorial(b)
        if self.kind == "star":
            # K_{1,1} is an edge, whose two ends can swap
            return 2 if k == 1 else factorial(k)
        from .counting import count_injective_maps

        return count_injective_maps(self.graph, self.graph)

    @property
    def name(self) -> str:
        if self.kind == "clique":
            return f"K{self.params[0]}"
        if self.kind == "bipartite":
            return f"K{self.params[0]},{self.params[1]}"
        if self.kind == "star":
            return f"S{self.params[0]}"
        if self.kind == "path":
            return f"P{self.params[0]}"
        if self.kind == "cycle":
            return f"C{self.params[0]}"
        return "g6:" + self.explicit.to_graph6()

    def __str__(self) -> str:
        return self.name


_NAME_RE = re.compile(
    r"^(?:(?P<kind>[KPCS])_?\{?(?P<a>\d+)(?:,(?P<b>\d+))?\}?)$", re.IGNORECASE
)


def parse_pattern(text: str) -> PatternSpec:
    """Parse ``K3``, ``K2,3`` / ``K_{2,3}``, ``S3`` (= K_{1,3}), ``P4``, ``C5``,
    ``2K2`` (disjoint copies) or ``g6:<graph6>``."""
    text = text.strip()
    if text.lower().startswith("g6:"):
        try:
            return PatternSpec.from_graph(Graph.from_graph6(text[3:]))
        except GraphError as exc:
            raise PatternError(str(exc)) from exc
    mult = re.match(r"^(\d+)\s*[*·]?\s*(.+)$", text)
    if mult and not text[0].isalpha():
        t, inner = int(mult.group(1)), parse_pattern(mult.group(2))
        g = Graph.empty(0)
        for _ in range(t):
            g = g.disjoint_union(inner.graph)
        return PatternSpec.from_graph(g)
    m = _NAME_RE.match(text)
    if not m:
        raise PatternError(f"cannot parse pattern {text!r}")
    kind, a, b = m.group("kind").upper(), int(m.group("a")), m.group("b")
    if b is not None:
        if kind != "K":
            raise PatternError(f"two parameters only make sense for K_a,b: {text!r}")
        return PatternSpec.bipartite(a, int(b))
    return {
        "K": PatternSpec.clique,
        "P": PatternSpec.path,
        "C": PatternSpec.cycle,
        "S": PatternSpec.star,
    }[kind](a)
