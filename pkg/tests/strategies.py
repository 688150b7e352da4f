from hypothesis import strategies as st

from satex.graph import Graph


@st.composite
def graphs(draw, min_n=0, max_n=7):
    n = draw(st.integers(min_n, max_n))
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    bits = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    return Graph.from_edges(n, [e for e, b in zip(pairs, bits) if b])


@st.composite
def graphs_with_perm(draw, min_n=1, max_n=7):
    g = draw(graphs(min_n, max_n))
    return g, draw(st.permutations(range(g.n)))
