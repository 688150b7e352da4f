"""Asymptotic main terms against exact counts on their witness hosts, over
doubling n-ladders."""

from fractions import Fraction
from math import comb, perm

from .bounds import pathcycle_corollary_bound, pathcycle_lower_bound, pathpath_main_term
from .counting import count_subgraphs
from .families import MainTermQuery, closed_form_main_term, main_term_host
from .patterns import PatternSpec

PATHPATH_CASES = ((2, 2), (2, 3), (3, 2))
PATHPATH_LADDER = (50, 100, 200)
PATHCYCLE_LADDER = (40, 80)
TABLE_LADDER = (8, 12, 16)


def path_count_complete(n: int, k: int) -> int:
    """Copies of P_k (k vertices) in K_n."""
    return perm(n, k) // 2 if k >= 2 else n


def pathpath_ladder(k: int, q: int, ladder=PATHPATH_LADDER) -> list[tuple[int, float]]:
    """(n, exact / main term) with the host K_n and m = N(P_k, K_n)."""
    t = q * (k - 1) + 1
    out = []
    for n in ladder:
        main = pathpath_main_term(n, k, q, path_count_complete(n, k)).value
        out.append((n, path_count_complete(n, t) / main))
    return out


def cycle_count_balanced_bipartite(h: int, length: int) -> int:
    """Copies of C_length (length even) in K_{h,h}."""
    half = length // 2
    return perm(h, half) ** 2 // length


def pathcycle_ladder(ladder=PATHCYCLE_LADDER):
    """(n, bound, exact C_4 count) on K_{n/2,n/2} with m = N(P_3)."""
    out = []
    for n in ladder:
        h = n // 2
        m = n * comb(h, 2)
        out.append((n, pathcycle_lower_bound(n, 2, m).value, cycle_count_balanced_bipartite(h, 4)))
    return out


def corollary_ladder(ladder=PATHCYCLE_LADDER):
    out = []
    for n in ladder:
        h = n // 2
        m = n * comb(h, 2)
        out.append((n, pathcycle_corollary_bound(n, 2, 2, m).value, cycle_count_balanced_bipartite(h, 8)))
    return out


def table_ladder(family: str, lam: Fraction, k: int, ladder=TABLE_LADDER) -> list[tuple[int, float]]:
    """(n, relative error of the main term) against brute-force path counts."""
    q = MainTermQuery(lam, PatternSpec.path(k), family)
    out = []
    for n in ladder:
        exact = count_subgraphs(q.pattern, main_term_host(q, n))
        out.append((n, float(abs(closed_form_main_term(q, n) - exact) / exact)))
    return out

