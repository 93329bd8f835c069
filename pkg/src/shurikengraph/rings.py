"""Finite rings, their idempotent and clean graphs, and the explicit
bijection exhibiting each clean graph as a shuriken graph.

Rings are either modular (integers mod m) or given by explicit addition
and multiplication tables; table rings are validated exhaustively at
load. Adjacency predicates check products on both sides, so tables need
not be commutative.
"""

from __future__ import annotations

import json
from dataclasses import dataclass

from .graphs import Graph, from_edge_list
from .shuriken import LabeledShuriken, ShurikenParams, build


@dataclass(frozen=True)
class ModularRing:
    """The ring of integers modulo m, m >= 2."""

    modulus: int

    def __post_init__(self) -> None:
        if self.modulus < 2:
            raise ValueError(f"modulus must be at least 2, got {self.modulus}")

    @property
    def order(self) -> int:
        return self.modulus

    @property
    def zero(self) -> int:
        return 0

    @property
    def one(self) -> int:
        return 1

    def add(self, a: int, b: int) -> int:
        return (a + b) % self.modulus

    def mul(self, a: int, b: int) -> int:
        return (a * b) % self.modulus

    def describe(self) -> str:
        return f"Z{self.modulus}"


@dataclass(frozen=True)
class TableRing:
    """A finite ring with identity given by explicit operation tables."""

    order: int
    add_table: tuple[tuple[int, ...], ...]
    mul_table: tuple[tuple[int, ...], ...]
    zero: int
    one: int

    def __post_init__(self) -> None:
        _validate_table_ring(self)

    def add(self, a: int, b: int) -> int:
        return self.add_table[a][b]

    def mul(self, a: int, b: int) -> int:
        return self.mul_table[a][b]

    def describe(self) -> str:
        return f"table-ring-{self.order}"


FiniteRing = ModularRing | TableRing


def _validate_table_ring(ring: TableRing) -> None:
    n = ring.order
    if n < 1:
        raise ValueError("table ring must have at least one element")
    for label, table in (("add", ring.add_table), ("mul", ring.mul_table)):
        if len(table) != n or any(len(row) != n for row in table):
            raise ValueError(f"{label} table must be {n}x{n}")
        for row in table:
            for entry in row:
                if not 0 <= entry < n:
                    raise ValueError(f"{label} table entry {entry} out of range")
    if not 0 <= ring.zero < n or not 0 <= ring.one < n:
        raise ValueError("zero and one must name elements")
    elems = range(n)
    add, mul = ring.add, ring.mul
    for a in elems:
        if add(a, ring.zero) != a or add(ring.zero, a) != a:
            raise ValueError(f"additive identity fails at {a}")
        if mul(a, ring.one) != a or mul(ring.one, a) != a:
            raise ValueError(f"multiplicative identity fails at {a}")
        if all(add(a, b) != ring.zero for b in elems):
            raise ValueError(f"no additive inverse for {a}")
        for b in elems:
            if add(a, b) != add(b, a):
                raise ValueError(f"addition not commutative at ({a}, {b})")
    for a in elems:
        for b in elems:
            for c in elems:
                if add(add(a, b), c) != add(a, add(b, c)):
                    raise ValueError(f"addition not associative at ({a}, {b}, {c})")
                if mul(mul(a, b), c) != mul(a, mul(b, c)):
                    raise ValueError(f"multiplication not associative at ({a}, {b}, {c})")
                if mul(a, add(b, c)) != add(mul(a, b), mul(a, c)):
                    raise ValueError(f"left distributivity fails at ({a}, {b}, {c})")
                if mul(add(a, b), c) != add(mul(a, c), mul(b, c)):
                    raise ValueError(f"right distributivity fails at ({a}, {b}, {c})")


def table_ring_from_dict(payload: dict) -> TableRing:
    """Load a table ring from the JSON object schema
    {order, add, mul, zero, one}."""
    try:
        return TableRing(
            order=payload["order"],
            add_table=tuple(tuple(row) for row in payload["add"]),
            mul_table=tuple(tuple(row) for row in payload["mul"]),
            zero=payload["zero"],
            one=payload["one"],
        )
    except KeyError as exc:
        raise ValueError(f"table ring is missing field {exc}") from exc


def table_ring_from_json(text: str) -> TableRing:
    return table_ring_from_dict(json.loads(text))


def idempotents(ring: FiniteRing) -> list[int]:
    """All x with x*x = x, in ascending element order."""
    return [x for x in range(ring.order) if ring.mul(x, x) == x]


def nontrivial_idempotents(ring: FiniteRing) -> list[int]:
    return [x for x in idempotents(ring) if x not in (ring.zero, ring.one)]


@dataclass(frozen=True)
class UnitOrdering:
    """Units arranged so the shuriken partner map pairs mutual inverses.

    Positions 1..t (1-based) hold the self-inverse units in ascending
    element order; the remaining units form inverse pairs with the unit at
    position i paired at position n + t + 1 - i, pairs sorted by their
    smaller element which sits in the lower block.
    """

    units: tuple[int, ...]
    t: int

    @property
    def n(self) -> int:
        return len(self.units)

    def at(self, position: int) -> int:
        """Unit at 1-based position."""
        if not 1 <= position <= self.n:
            raise ValueError(f"position {position} out of range 1..{self.n}")
        return self.units[position - 1]

    def position_of(self, unit: int) -> int:
        return self.units.index(unit) + 1


def units(ring: FiniteRing) -> UnitOrdering:
    """Two-sided units of the ring in shuriken-compatible order."""
    inverse: dict[int, int] = {}
    for u in range(ring.order):
        for w in range(ring.order):
            if ring.mul(u, w) == ring.one and ring.mul(w, u) == ring.one:
                inverse[u] = w
                break
    self_inverse = sorted(u for u, w in inverse.items() if u == w)
    paired = sorted(
        (min(u, w), max(u, w)) for u, w in inverse.items() if u != w
    )
    paired = sorted(set(paired))
    lower = [p for p, _ in paired]
    upper = [q for _, q in paired]
    ordering = UnitOrdering(
        units=tuple(self_inverse + lower + list(reversed(upper))),
        t=len(self_inverse),
    )
    for i in range(ordering.t + 1, ordering.n + 1):
        mate = ordering.at(ordering.n + ordering.t + 1 - i)
        if ring.mul(ordering.at(i), mate) != ring.one:
            raise AssertionError("unit ordering violates the partner pairing")
    return ordering


def idempotent_graph(ring: FiniteRing) -> Graph:
    """Graph on non-trivial idempotents; edges join annihilating pairs."""
    verts = nontrivial_idempotents(ring)
    index = {x: i for i, x in enumerate(verts)}
    edges = [
        (index[x], index[y])
        for i, x in enumerate(verts)
        for y in verts[i + 1 :]
        if ring.mul(x, y) == ring.zero and ring.mul(y, x) == ring.zero
    ]
    return from_edge_list(len(verts), edges, [str(x) for x in verts])


def clean_graph(ring: FiniteRing) -> Graph:
    """Graph on pairs (e, u) with e a nonzero idempotent and u a unit.

    Distinct vertices are adjacent when the idempotent parts annihilate
    each other or the unit parts are mutual inverses. Vertices are laid
    out copy-major by unit position with the (1, u) vertex last in each
    copy, mirroring the shuriken layout so the correspondence check is an
    identity on vertex ids.
    """
    nontrivial = nontrivial_idempotents(ring)
    ordering = units(ring)
    verts: list[tuple[int, int]] = []
    for position in range(1, ordering.n + 1):
        u = ordering.at(position)
        verts.extend((e, u) for e in nontrivial)
        verts.append((ring.one, u))
    index = {pair: i for i, pair in enumerate(verts)}
    edges = []
    for i, (e1, u1) in enumerate(verts):
        for j in range(i + 1, len(verts)):
            e2, u2 = verts[j]
            annihilate = (
                ring.mul(e1, e2) == ring.zero and ring.mul(e2, e1) == ring.zero
            )
            inverses = ring.mul(u1, u2) == ring.one and ring.mul(u2, u1) == ring.one
            if annihilate or inverses:
                edges.append((i, j))
    labels = [f"({e},{u})" for e, u in verts]
    return from_edge_list(len(verts), edges, labels)


@dataclass(frozen=True)
class CorrespondenceResult:
    """Outcome of matching Cl2(R) against the shuriken graph of I(R)."""

    verdict: str  # MATCH or MISMATCH
    params: ShurikenParams
    base: Graph
    clean: Graph
    shuriken: LabeledShuriken
    bijection: tuple[tuple[str, str], ...]
    missing_edges: tuple[tuple[int, int], ...]
    extra_edges: tuple[tuple[int, int], ...]


def clean_as_shuriken(ring: FiniteRing) -> CorrespondenceResult:
    """Check Cl2(R) = Shu^t_n(I(R)) under the explicit unit-indexed map.

    The vertex (e, u_i) maps to copy i of idempotent e and (1, u_i) maps
    to the apex of copy i: the identity 1 annihilates no nonzero
    idempotent, exactly the apex adjacency pattern. Both graphs use the
    same copy-major layout, so the map is the identity on vertex ids and
    the check is plain edge-set equality.
    """
    base = idempotent_graph(ring)
    ordering = units(ring)
    # 1 is always a self-inverse unit, so t >= 1 holds in every ring
    params = ShurikenParams(t=ordering.t, n=ordering.n)
    built = build(base, params)
    clean = clean_graph(ring)
    bijection = tuple(
        (clean.label(vid), built.graph.label(vid))
        for vid in range(clean.num_vertices)
    )
    clean_edges = set(clean.edges)
    shu_edges = set(built.graph.edges)
    missing = tuple(sorted(shu_edges - clean_edges))
    extra = tuple(sorted(clean_edges - shu_edges))
    verdict = (
        "MATCH"
        if clean.num_vertices == built.graph.num_vertices and not missing and not extra
        else "MISMATCH"
    )
    return CorrespondenceResult(
        verdict=verdict,
        params=params,
        base=base,
        clean=clean,
        shuriken=built,
        bijection=bijection,
        missing_edges=missing,
        extra_edges=extra,
    )
