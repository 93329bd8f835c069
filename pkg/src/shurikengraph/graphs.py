"""Simple undirected graphs with contiguous integer vertex ids.

Graphs are immutable once built: adjacency is stored both as bitset rows
(one Python int per vertex, for fast set algebra in the exact solvers)
and as a sorted edge tuple (for iteration and serialization). Parallel
edges in input collapse to a single edge; self-loops are rejected.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from typing import Iterable, Iterator, Sequence

FAMILIES = ("path", "cycle", "complete", "star", "null")


@dataclass(frozen=True)
class Graph:
    """Immutable simple undirected graph on vertices 0..num_vertices-1."""

    num_vertices: int
    edges: tuple[tuple[int, int], ...]
    adjacency: tuple[int, ...] = field(repr=False)
    labels: tuple[str, ...] | None = None

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    def degree(self, v: int) -> int:
        self._check_vertex(v)
        return self.adjacency[v].bit_count()

    def degrees(self) -> list[int]:
        return [row.bit_count() for row in self.adjacency]

    def neighbors(self, v: int) -> Iterator[int]:
        """Yield neighbors of v in ascending id order."""
        self._check_vertex(v)
        row = self.adjacency[v]
        while row:
            low = row & -row
            yield low.bit_length() - 1
            row ^= low

    def has_edge(self, u: int, v: int) -> bool:
        self._check_vertex(u)
        self._check_vertex(v)
        return bool(self.adjacency[u] >> v & 1)

    def label(self, v: int) -> str:
        self._check_vertex(v)
        return self.labels[v] if self.labels is not None else str(v)

    def _check_vertex(self, v: int) -> None:
        if not 0 <= v < self.num_vertices:
            raise ValueError(f"vertex {v} out of range for order {self.num_vertices}")


def from_edge_list(
    order: int,
    edges: Iterable[tuple[int, int]],
    labels: Sequence[str] | None = None,
) -> Graph:
    """Build a graph from an edge list, deduplicating symmetric pairs.

    Rejects out-of-range endpoints and self-loops, naming the offending
    pair in the error message.
    """
    if order < 0:
        raise ValueError(f"order must be nonnegative, got {order}")
    if labels is not None and len(labels) != order:
        raise ValueError(f"expected {order} labels, got {len(labels)}")
    dedup: set[tuple[int, int]] = set()
    for u, v in edges:
        if not (0 <= u < order and 0 <= v < order):
            raise ValueError(f"edge ({u}, {v}) out of range for order {order}")
        if u == v:
            raise ValueError(f"self-loop ({u}, {v}) rejected")
        dedup.add((u, v) if u < v else (v, u))
    rows = [0] * order
    for u, v in dedup:
        rows[u] |= 1 << v
        rows[v] |= 1 << u
    return Graph(
        num_vertices=order,
        edges=tuple(sorted(dedup)),
        adjacency=tuple(rows),
        labels=tuple(labels) if labels is not None else None,
    )


def generator(family: str, order: int) -> Graph:
    """Standard graph of the given family: path, cycle, complete, star, null."""
    if family not in FAMILIES:
        raise ValueError(f"unknown family {family!r}, expected one of {FAMILIES}")
    if order < 1:
        raise ValueError(f"order must be at least 1, got {order}")
    if family == "path":
        edges = [(i, i + 1) for i in range(order - 1)]
    elif family == "cycle":
        if order < 3:
            raise ValueError(f"cycle requires order >= 3, got {order}")
        edges = [(i, (i + 1) % order) for i in range(order)]
    elif family == "complete":
        edges = [(i, j) for i in range(order) for j in range(i + 1, order)]
    elif family == "star":
        edges = [(0, i) for i in range(1, order)]
    else:
        edges = []
    return from_edge_list(order, edges)


def _merged_labels(g: Graph, h: Graph) -> tuple[str, ...] | None:
    if g.labels is None and h.labels is None:
        return None
    return tuple(g.label(v) for v in range(g.num_vertices)) + tuple(
        h.label(v) for v in range(h.num_vertices)
    )


def disjoint_union(g: Graph, h: Graph) -> Graph:
    """Place g and h side by side with no edges between them."""
    shift = g.num_vertices
    edges = list(g.edges) + [(u + shift, v + shift) for u, v in h.edges]
    return from_edge_list(g.num_vertices + h.num_vertices, edges, _merged_labels(g, h))


def join(g: Graph, h: Graph) -> Graph:
    """Disjoint union of g and h plus every edge between the two sides."""
    shift = g.num_vertices
    edges = list(g.edges) + [(u + shift, v + shift) for u, v in h.edges]
    edges += [(u, v + shift) for u in range(g.num_vertices) for v in range(h.num_vertices)]
    return from_edge_list(g.num_vertices + h.num_vertices, edges, _merged_labels(g, h))


def complement(g: Graph) -> Graph:
    edges = [
        (u, v)
        for u in range(g.num_vertices)
        for v in range(u + 1, g.num_vertices)
        if not g.adjacency[u] >> v & 1
    ]
    return from_edge_list(g.num_vertices, edges, g.labels)


def induced_subgraph(g: Graph, vertices: Iterable[int]) -> Graph:
    """Subgraph induced by the given vertex set, reindexed in sorted order."""
    kept = sorted(set(vertices))
    for v in kept:
        g._check_vertex(v)
    index = {v: i for i, v in enumerate(kept)}
    edges = [(index[u], index[v]) for u, v in g.edges if u in index and v in index]
    labels = tuple(g.labels[v] for v in kept) if g.labels is not None else None
    return from_edge_list(len(kept), edges, labels)


def is_connected(g: Graph) -> bool:
    """Breadth-first reachability; the 0-vertex graph counts as connected."""
    if g.num_vertices == 0:
        return True
    seen = 1
    queue = deque([0])
    while queue:
        u = queue.popleft()
        fresh = g.adjacency[u] & ~seen
        seen |= fresh
        while fresh:
            low = fresh & -fresh
            queue.append(low.bit_length() - 1)
            fresh ^= low
    return seen == (1 << g.num_vertices) - 1
