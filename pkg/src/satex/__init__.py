"""Workbench for satex(n, F: m, G), the least number of copies of G in an
n-vertex graph that contains at least m copies of F."""

from .counting import count_subgraphs, count_weighted_subgraphs
from .graph import Graph
from .patterns import PatternSpec, parse_pattern
from .search import SearchResult, exact_generalized_turan, exact_satex

__version__ = "0.1.0"
