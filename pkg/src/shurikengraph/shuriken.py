"""The (t, n)-shuriken construction and its closed-form order/size/degree.

``build`` materializes the graph from n copies of the base graph plus one
extra vertex per copy: base edges are replicated within and across all
copies, the first t copies are completed into cliques, and the remaining
n - t copies are fully joined in partner pairs (i, n + t + 1 - i).

Two size formulas are provided. ``paper_size`` evaluates the published
closed form verbatim; ``corrected_size`` evaluates the count the
construction actually produces. The two differ by (n-1)^2 * |E(base)|,
and the audit layer records that deviation rather than resolving it.
"""

from __future__ import annotations

from dataclasses import dataclass

from .graphs import Graph, from_edge_list


@dataclass(frozen=True)
class ShurikenParams:
    """Copy count n and completed-copy count t, with n - t even."""

    t: int
    n: int

    def __post_init__(self) -> None:
        if self.t < 1:
            raise ValueError(f"t must be a positive integer, got t={self.t}")
        if self.n < self.t:
            raise ValueError(f"n must be at least t, got t={self.t}, n={self.n}")
        if (self.n - self.t) % 2 != 0:
            raise ValueError(f"n - t must be even, got t={self.t}, n={self.n}")

    @property
    def midpoint(self) -> int:
        """Last copy index of the lower half of the paired range."""
        return (self.n + self.t) // 2


@dataclass(frozen=True)
class CopyVertex:
    """Copy number `copy` (1-based) of base vertex `base`."""

    base: int
    copy: int


@dataclass(frozen=True)
class ApexVertex:
    """The extra vertex added to copy `copy` (1-based)."""

    copy: int


ShurikenVertex = CopyVertex | ApexVertex


def partner(i: int, params: ShurikenParams) -> int:
    """Partner copy index n + t + 1 - i, an involution on {t+1, .., n}."""
    if not params.t + 1 <= i <= params.n:
        raise ValueError(
            f"copy {i} has no partner (paired copies are {params.t + 1}..{params.n})"
        )
    return params.n + params.t + 1 - i


@dataclass(frozen=True)
class LabeledShuriken:
    """A built shuriken graph together with its vertex-id bijection.

    Vertex ids use copy-major layout with the apex last in each copy:
    id(x_i) = (i-1)(v+1) + x and id(z_i) = (i-1)(v+1) + v, which keeps
    audits and golden files reproducible.
    """

    graph: Graph
    params: ShurikenParams
    base: Graph

    @property
    def base_order(self) -> int:
        return self.base.num_vertices

    def id_of(self, vertex: ShurikenVertex) -> int:
        stride = self.base_order + 1
        if isinstance(vertex, ApexVertex):
            if not 1 <= vertex.copy <= self.params.n:
                raise ValueError(f"copy {vertex.copy} out of range")
            return (vertex.copy - 1) * stride + self.base_order
        if not 1 <= vertex.copy <= self.params.n:
            raise ValueError(f"copy {vertex.copy} out of range")
        self.base._check_vertex(vertex.base)
        return (vertex.copy - 1) * stride + vertex.base

    def vertex_at(self, vid: int) -> ShurikenVertex:
        self.graph._check_vertex(vid)
        stride = self.base_order + 1
        copy, offset = divmod(vid, stride)
        if offset == self.base_order:
            return ApexVertex(copy=copy + 1)
        return CopyVertex(base=offset, copy=copy + 1)


def build(base: Graph, params: ShurikenParams) -> LabeledShuriken:
    """Materialize the shuriken graph of `base` for the given parameters."""
    v = base.num_vertices
    stride = v + 1
    order = params.n * stride

    def vid(x: int, i: int) -> int:
        return (i - 1) * stride + x

    edges: set[tuple[int, int]] = set()

    def add(a: int, b: int) -> None:
        edges.add((a, b) if a < b else (b, a))

    # base edges replicated within and across every copy
    for x, y in base.edges:
        for i in range(1, params.n + 1):
            for j in range(1, params.n + 1):
                add(vid(x, i), vid(y, j))
    # the first t copies become cliques on v+1 vertices (apex included)
    for i in range(1, params.t + 1):
        block = [vid(x, i) for x in range(stride)]
        for a in range(stride):
            for b in range(a + 1, stride):
                add(block[a], block[b])
    # each paired copy set is fully joined (apexes included)
    for i in range(params.t + 1, params.midpoint + 1):
        j = partner(i, params)
        for a in range(stride):
            for b in range(stride):
                add(vid(a, i), vid(b, j))

    labels = []
    for i in range(1, params.n + 1):
        labels += [f"{base.label(x)}@{i}" for x in range(v)]
        labels.append(f"z@{i}")
    graph = from_edge_list(order, edges, labels)
    return LabeledShuriken(graph=graph, params=params, base=base)


def expected_order(params: ShurikenParams, base_order: int) -> int:
    return params.n * (base_order + 1)


def paper_size(params: ShurikenParams, base_order: int, base_size: int) -> int:
    """The published size expression, evaluated verbatim."""
    t, n, v = params.t, params.n, base_order
    return (n * v * v + (2 * n - t) * v + (n - t)) // 2 + (n - 1) * base_size


def corrected_size(params: ShurikenParams, base_order: int, base_size: int) -> int:
    """Edge count of the constructed graph; differs from the published
    expression by (n-1)^2 * base_size."""
    t, n, v = params.t, params.n, base_order
    return t * v * (v + 1) // 2 + (n - t) * (v + 1) ** 2 // 2 + n * (n - 1) * base_size


def expected_degree(vertex: ShurikenVertex, base: Graph, params: ShurikenParams) -> int:
    """Degree the construction assigns to a vertex, from the base degree."""
    v = base.num_vertices
    bump = 0 if vertex.copy <= params.t else 1
    if isinstance(vertex, ApexVertex):
        return v + bump
    return base.degree(vertex.base) * (params.n - 1) + v + bump
