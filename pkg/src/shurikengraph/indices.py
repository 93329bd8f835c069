"""Degree-based topological indices, computed directly from the graph.

Both Zagreb indices are exact integers here: no floating point.
"""

from __future__ import annotations

from .graphs import Graph


def m1_direct(g: Graph) -> int:
    """First Zagreb index: sum of squared vertex degrees."""
    return sum(d * d for d in g.degrees())


def m2_direct(g: Graph) -> int:
    """Second Zagreb index: sum over edges of endpoint-degree products."""
    degrees = g.degrees()
    return sum(degrees[u] * degrees[v] for u, v in g.edges)
