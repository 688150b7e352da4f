"""Simple undirected graphs on labeled vertices, stored as bitset rows.

Row ``adj[v]`` is an int whose bit ``u`` is set iff ``uv`` is an edge.  Python
ints are unbounded, so the same representation serves every ``n``.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Sequence


class GraphError(ValueError):
    pass


class Graph6Error(GraphError):
    """Malformed graph6 input; ``offset`` is the 0-based byte position."""

    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} (byte offset {offset})")
        self.offset = offset


@dataclass(frozen=True)
class Graph:
    n: int
    adj: tuple[int, ...]

    def __post_init__(self):
        if self.n < 0 or len(self.adj) != self.n:
            raise GraphError(f"need exactly n={self.n} adjacency rows, got {len(self.adj)}")
        full = (1 << self.n) - 1
        for v, row in enumerate(self.adj):
            if row & ~full:
                raise GraphError(f"row {v} has a bit outside 0..{self.n - 1}")
            if row >> v & 1:
                raise GraphError(f"loop at vertex {v}")
            r = row
            while r:
                low = r & -r
                u = low.bit_length() - 1
                if not self.adj[u] >> v & 1:
                    raise GraphError(f"asymmetric adjacency between {v} and {u}")
                r ^= low

    @classmethod
    def _unchecked(cls, n: int, adj: tuple[int, ...]) -> "Graph":
        # for rows produced by operations that preserve the invariants
        g = object.__new__(cls)
        object.__setattr__(g, "n", n)
        object.__setattr__(g, "adj", adj)
        return g

    # -- constructors -------------------------------------------------------

    @classmethod
    def empty(cls, n: int) -> "Graph":
        return cls(n, (0,) * n)

    @classmethod
    def complete(cls, n: int) -> "Graph":
        full = (1 << n) - 1
        return cls(n, tuple(full ^ (1 << v) for v in range(n)))

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[Sequence[int]]) -> "Graph":
        rows = [0] * n
        for e in edges:
            u, v = int(e[0]), int(e[1])
            if not (0 <= u < n and 0 <= v < n):
                raise GraphError(f"edge {u}-{v} out of range for n={n}")
            if u == v:
                raise GraphError(f"loop at vertex {u}")
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        return cls(n, tuple(rows))

    @classmethod
    def complete_bipartite(cls, a: int, b: int) -> "Graph":
        return cls.from_edges(a + b, ((i, a + j) for i in range(a) for j in range(b)))

    @classmethod
    def path(cls, k: int) -> "Graph":
        """Path on ``k`` vertices."""
        return cls.from_edges(k, ((i, i + 1) for i in range(k - 1)))

    @classmethod
    def cycle(cls, k: int) -> "Graph":
        """Cycle on ``k`` vertices (k >= 3)."""
        if k < 3:
            raise GraphError("a cycle needs at least 3 vertices")
        return cls.from_edges(k, ((i, (i + 1) % k) for i in range(k)))

    @classmethod
    def star(cls, s: int) -> "Graph":
        """K_{1,s}; vertex 0 is the centre."""
        return cls.from_edges(s + 1, ((0, i) for i in range(1, s + 1)))

    @classmethod
    def petersen(cls) -> "Graph":
        outer = [(i, (i + 1) % 5) for i in range(5)]
        spokes = [(i, i + 5) for i in range(5)]
        inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
        return cls.from_edges(10, outer + spokes + inner)

    # -- queries ------------------------------------------------------------

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def degrees(self) -> list[int]:
        return [row.bit_count() for row in self.adj]

    def edge_count(self) -> int:
        return sum(row.bit_count() for row in self.adj) // 2

    def edges(self) -> list[tuple[int, int]]:
        out = []
        for u in range(self.n):
            r = self.adj[u] >> (u + 1)
            v = u + 1
            while r:
                if r & 1:
                    out.append((u, v))
                r >>= 1
                v += 1
        return out

    def is_complete(self) -> bool:
        return self.edge_count() == self.n * (self.n - 1) // 2

    # -- transformations ----------------------------------------------------

    def complement(self) -> "Graph":
        full = (1 << self.n) - 1
        return Graph._unchecked(self.n, tuple(full ^ row ^ (1 << v) for v, row in enumerate(self.adj)))

    def relabel(self, perm: Sequence[int]) -> "Graph":
        """Return the graph with vertex ``v`` renamed ``perm[v]``."""
        rows = [0] * self.n
        for u, v in self.edges():
            a, b = perm[u], perm[v]
            rows[a] |= 1 << b
            rows[b] |= 1 << a
        return Graph._unchecked(self.n, tuple(rows))

    def toggle_edge(self, u: int, v: int) -> "Graph":
        rows = list(self.adj)
        rows[u] ^= 1 << v
        rows[v] ^= 1 << u
        return Graph._unchecked(self.n, tuple(rows))

    def add_vertex(self, neighbours: int) -> "Graph":
        """Append vertex ``n`` joined to the bitset ``neighbours``."""
        rows = list(self.adj)
        v = self.n
        r = neighbours
        while r:
            low = r & -r
            rows[low.bit_length() - 1] |= 1 << v
            r ^= low
        rows.append(neighbours)
        return Graph._unchecked(self.n + 1, tuple(rows))

    def induced(self, vertices: Sequence[int]) -> "Graph":
        index = {v: i for i, v in enumerate(vertices)}
        return Graph.from_edges(
            len(vertices),
            ((index[u], index[v]) for u, v in self.edges() if u in index and v in index),
        )

    def disjoint_union(self, other: "Graph") -> "Graph":
        shift = self.n
        return Graph.from_edges(
            self.n + other.n,
            self.edges() + [(u + shift, v + shift) for u, v in other.edges()],
        )

    # -- interchange --------------------------------------------------------

    def to_json(self) -> dict:
        return {"n": self.n, "edges": [list(e) for e in self.edges()]}

    @classmethod
    def from_json(cls, obj: dict | str) -> "Graph":
        if isinstance(obj, str):
            obj = json.loads(obj)
        try:
            return cls.from_edges(int(obj["n"]), obj["edges"])
        except (KeyError, TypeError) as exc:
            raise GraphError(f"bad edge-list JSON: {exc}") from exc

    def to_graph6(self) -> str:
        return encode_graph6(self)

    @classmethod
    def from_graph6(cls, text: str) -> "Graph":
        return decode_graph6(text)

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, edges={self.edges()})"


def _upper_triangle_pairs(n: int):
    # graph6 column-major order: (0,1), (0,2), (1,2), (0,3), ...
    for j in range(1, n):
        for i in range(j):
            yield i, j


def _encode_n(n: int) -> str:
    if n < 0:
        raise GraphError("negative vertex count")
    if n <= 62:
        return chr(63 + n)
    if n <= 258047:
        return "~" + "".join(chr(63 + (n >> s & 63)) for s in (12, 6, 0))
    if n <= 68719476735:
        return "~~" + "".join(chr(63 + (n >> s & 63)) for s in (30, 24, 18, 12, 6, 0))
    raise GraphError("n too large for graph6")


def encode_graph6(g: Graph) -> str:
    bits = [1 if g.adj[i] >> j & 1 else 0 for i, j in _upper_triangle_pairs(g.n)]
    bits += [0] * (-len(bits) % 6)
    body = []
    for k in range(0, len(bits), 6):
        x = 0
        for b in bits[k:k + 6]:
            x = x << 1 | b
        body.append(chr(63 + x))
    return _encode_n(g.n) + "".join(body)


def decode_graph6(text: str) -> Graph:
    raw = text.strip("\n")
    offset = 0
    if raw.startswith(">>graph6<<"):
        offset = 10
    data = raw[offset:]
    for i, ch in enumerate(data):
        if not 63 <= ord(ch) <= 126:
            raise Graph6Error(f"character {ch!r} outside 63..126", offset + i)
    if not data:
        raise Graph6Error("missing size header", offset)
    vals = [ord(ch) - 63 for ch in data]
    if vals[0] != 63:
        n, pos = vals[0], 1
    elif len(vals) >= 2 and vals[1] != 63:
        if len(vals) < 4:
            raise Graph6Error("truncated 18-bit size header", offset + len(vals))
        n = vals[1] << 12 | vals[2] << 6 | vals[3]
        pos = 4
    else:
        if len(vals) < 8:
            raise Graph6Error("truncated 36-bit size header", offset + len(vals))
        n = 0
        for v in vals[2:8]:
            n = n << 6 | v
        pos = 8
    nbits = n * (n - 1) // 2
    need = (nbits + 5) // 6
    if len(vals) - pos != need:
        raise Graph6Error(
            f"expected {need} data bytes for n={n}, found {len(vals) - pos}",
            offset + min(len(vals), pos + need),
        )
    rows = [0] * n
    pairs = _upper_triangle_pairs(n)
    for k in range(need):
        chunk = vals[pos + k]
        for shift in range(5, -1, -1):
            idx = k * 6 + (5 - shift)
            bit = chunk >> shift & 1
            if idx >= nbits:
                if bit:
                    raise Graph6Error("nonzero padding bit", offset + pos + k)
                continue
            if bit:
                i, j = next(pairs)
                rows[i] |= 1 << j
                rows[j] |= 1 << i
            else:
                next(pairs)
    return Graph(n, tuple(rows))


def all_labeled_graphs(n: int):
    """Every labeled graph on ``n`` vertices (2^C(n,2) of them); oracle use only."""
    pairs = list(combinations(range(n), 2))
    for mask in range(1 << len(pairs)):
        rows = [0] * n
        for k, (u, v) in enumerate(pairs):
            if mask >> k & 1:
                rows[u] |= 1 << v
                rows[v] |= 1 << u
        yield Graph(n, tuple(rows))
