"""Closed-form predictions for shuriken-graph invariants.

Each function evaluates one published claim (clique number, chromatic
bounds and the explicit coloring scheme, independence number, domination
value/interval, Hamiltonian cycle construction, Eulerian characterization,
Zagreb closed forms). The audit layer compares these predictions against
the exact solvers; predictions are never trusted as ground truth.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Sequence

from .graphs import Graph, is_connected
from .shuriken import (
    ApexVertex,
    CopyVertex,
    ShurikenParams,
    ShurikenVertex,
    build,
    partner,
)
from .solvers import (
    SolverBudget,
    chromatic_number,
    hamiltonian_path,
    max_clique,
    max_independent_set,
    min_dominating_set,
)


@dataclass(frozen=True)
class InvariantBundle:
    """Exact clique, chromatic, independence, and domination numbers."""

    omega: int
    chi: int
    alpha: int
    gamma: int


def exact_invariants(g: Graph, budget: SolverBudget | None = None) -> InvariantBundle:
    return InvariantBundle(
        omega=max_clique(g, budget)[0],
        chi=chromatic_number(g, budget)[0],
        alpha=max_independent_set(g, budget)[0],
        gamma=min_dominating_set(g, budget)[0],
    )


def clique_formula(
    base: Graph, params: ShurikenParams, budget: SolverBudget | None = None
) -> int:
    """Predicted clique number: |V|+1 when n = t, else max(|V|+1, 2w)."""
    bound = base.num_vertices + 1
    if params.n == params.t:
        return bound
    omega, _ = max_clique(base, budget)
    return max(bound, 2 * omega)


def chromatic_case_equal(params: ShurikenParams, base_order: int) -> int:
    """Predicted chromatic number for the n = t case: |V|+1."""
    if params.n != params.t:
        raise ValueError(f"equality case requires n = t, got t={params.t}, n={params.n}")
    return base_order + 1


def is_proper_coloring(g: Graph, colors: Sequence[int]) -> bool:
    if len(colors) != g.num_vertices:
        return False
    return all(colors[u] != colors[v] for u, v in g.edges)


def _validate_optimal_coloring(base: Graph, f: Sequence[int], budget) -> int:
    """Check f is a proper coloring of base using exactly chi(base) colors;
    return chi."""
    if not is_proper_coloring(base, f):
        raise ValueError("coloring is not proper on the base graph")
    palette = set(f)
    chi = chromatic_number(base, budget)[0]
    if palette != set(range(1, chi + 1)):
        raise ValueError(
            f"coloring must use colors 1..{chi} exactly, got palette {sorted(palette)}"
        )
    return chi


def tight_classes(base: Graph, f: Sequence[int]) -> dict[int, tuple[int, ...]]:
    """Per color k, the vertices of class k adjacent to every vertex
    outside the class."""
    by_color: dict[int, list[int]] = {}
    for v, c in enumerate(f):
        by_color.setdefault(c, []).append(v)
    out: dict[int, tuple[int, ...]] = {}
    for c, members in sorted(by_color.items()):
        inside = set(members)
        outside = [v for v in range(base.num_vertices) if v not in inside]
        out[c] = tuple(
            x for x in members if all(base.has_edge(x, y) for y in outside)
        )
    return out


def phi_correction(base: Graph, f: Sequence[int]) -> int:
    return sum(
        len(members) - 2 for members in tight_classes(base, f).values() if len(members) > 2
    )


def chromatic_lower_bound(
    base: Graph,
    f: Sequence[int],
    params: ShurikenParams,
    budget: SolverBudget | None = None,
) -> int:
    """Predicted lower bound max(|V|+1, 2*chi + phi) for the n > t case."""
    if params.n == params.t:
        raise ValueError("lower-bound case requires n > t")
    chi = _validate_optimal_coloring(base, f, budget)
    return max(base.num_vertices + 1, 2 * chi + phi_correction(base, f))


def _optimal_colorings(base: Graph, chi: int) -> Iterator[tuple[int, ...]]:
    """All proper colorings of base using colors 1..chi, every color used.

    Exhaustive; intended for bases of at most ~6 vertices.
    """
    n = base.num_vertices
    colors = [0] * n

    def assign(v: int) -> Iterator[tuple[int, ...]]:
        if v == n:
            if set(colors) == set(range(1, chi + 1)):
                yield tuple(colors)
            return
        for c in range(1, chi + 1):
            if all(colors[w] != c for w in base.neighbors(v) if w < v):
                colors[v] = c
                yield from assign(v + 1)
                colors[v] = 0

    return assign(0)


def chromatic_bound_range(
    base: Graph, params: ShurikenParams, budget: SolverBudget | None = None
) -> tuple[int, int]:
    """Min and max of the chromatic lower bound over all optimal colorings."""
    if params.n == params.t:
        raise ValueError("lower-bound case requires n > t")
    chi = chromatic_number(base, budget)[0]
    floor = base.num_vertices + 1
    bounds = [
        max(floor, 2 * chi + phi_correction(base, f))
        for f in _optimal_colorings(base, chi)
    ]
    return min(bounds), max(bounds)


@dataclass
class ColoringArtifacts:
    """The base coloring, its tight classes and correction, and the
    induced shuriken coloring."""

    base_coloring: tuple[int, ...]
    classes: dict[int, tuple[int, ...]]
    phi: int
    coloring: dict[ShurikenVertex, int]
    colors_used: int


class ImproperColoringError(Exception):
    """The constructed shuriken coloring violated an edge."""


def _completed_copy_assignment(
    base: Graph, f: Sequence[int], chi: int
) -> dict[int, int]:
    """Colors for the base vertices of one completed copy.

    Classes are processed in ascending color; singleton classes keep
    their color, pairs split into (k, k + chi) with the lower id keeping
    k, and larger classes borrow unused singleton-class colors shifted
    by chi, falling back to fresh colors above 2*chi. Ties everywhere
    break by ascending vertex id.
    """
    by_color: dict[int, list[int]] = {}
    for v, c in enumerate(f):
        by_color.setdefault(c, []).append(v)
    singleton_vertices = [m[0] for m in by_color.values() if len(m) == 1]
    assignment: dict[int, int] = {}
    used_donors: set[int] = set()

    def donor_for(vertex: int) -> int | None:
        for b in sorted(singleton_vertices):
            if b in used_donors or base.has_edge(vertex, b):
                continue
            used_donors.add(b)
            return b
        return None

    for k, members in sorted(by_color.items()):
        if len(members) == 1:
            assignment[members[0]] = k
        elif len(members) == 2:
            lo, hi = sorted(members)
            assignment[lo] = k
            assignment[hi] = k + chi
        else:
            order = sorted(members, key=lambda x: (-base.degree(x), x))
            assignment[order[0]] = k
            assignment[order[1]] = k + chi
            for j in range(2, len(order)):
                donor = donor_for(order[j])
                if donor is not None:
                    assignment[order[j]] = f[donor] + chi
                elif j == 2:
                    assignment[order[j]] = 2 * chi + 1
                else:
                    prev = max(assignment[order[l]] for l in range(j))
                    assignment[order[j]] = max(2 * chi + 1, prev + 1)
    return assignment


def shuriken_coloring(
    base: Graph,
    f: Sequence[int],
    params: ShurikenParams,
    budget: SolverBudget | None = None,
) -> ColoringArtifacts:
    """Extend an optimal base coloring to the built shuriken graph.

    Lower-half paired copies reuse f with color 1 on the apex, upper-half
    paired copies use f shifted by chi with color chi+1 on the apex, and
    completed copies follow the per-class splitting rules with the apex
    taking the least color unused in its copy. The result is checked to
    be proper on the built graph before returning.
    """
    if base.num_vertices == 0:
        raise ValueError("coloring scheme requires a base with at least one vertex")
    chi = _validate_optimal_coloring(base, f, budget)
    t, n, mid = params.t, params.n, params.midpoint

    coloring: dict[ShurikenVertex, int] = {}
    for i in range(t + 1, mid + 1):
        for x in range(base.num_vertices):
            coloring[CopyVertex(x, i)] = f[x]
        coloring[ApexVertex(i)] = 1
    for i in range(mid + 1, n + 1):
        for x in range(base.num_vertices):
            coloring[CopyVertex(x, i)] = f[x] + chi
        coloring[ApexVertex(i)] = chi + 1
    per_copy = _completed_copy_assignment(base, f, chi)
    apex_color = 1
    while apex_color in per_copy.values():
        apex_color += 1
    for i in range(1, t + 1):
        for x, c in per_copy.items():
            coloring[CopyVertex(x, i)] = c
        coloring[ApexVertex(i)] = apex_color

    shu = build(base, params)
    for u, v in shu.graph.edges:
        cu = coloring[shu.vertex_at(u)]
        cv = coloring[shu.vertex_at(v)]
        if cu == cv:
            raise ImproperColoringError(
                f"vertices {shu.graph.label(u)} and {shu.graph.label(v)} "
                f"are adjacent but both received color {cu}"
            )
    return ColoringArtifacts(
        base_coloring=tuple(f),
        classes=tight_classes(base, f),
        phi=phi_correction(base, f),
        coloring=coloring,
        colors_used=len(set(coloring.values())),
    )


def independence_formula(params: ShurikenParams, alpha_base: int) -> int:
    """Predicted independence number: t + (n-t)/2 * (alpha + 1)."""
    return params.t + (params.n - params.t) // 2 * (alpha_base + 1)


def domination_prediction(params: ShurikenParams, gamma_base: int) -> tuple[int, int]:
    """Predicted domination number as a closed interval [lo, hi].

    When gamma(base) <= t the claim is the exact value (n+t)/2, returned
    as a degenerate interval; otherwise the interval
    [(n+t)/2, gamma(base) + (n-t)/2].
    """
    half = (params.n + params.t) // 2
    if gamma_base <= params.t:
        return half, half
    return half, gamma_base + (params.n - params.t) // 2


def hamiltonian_construct(
    base: Graph, params: ShurikenParams, budget: SolverBudget | None = None
) -> list[ShurikenVertex]:
    """The explicit Hamiltonian cycle for bases with a Hamiltonian path.

    Each copy contributes the segment first, apex, last, .., second; the
    apex of a paired copy is borrowed from the partner copy. The cycle is
    validated against the built graph before returning.
    """
    if base.num_vertices < 2:
        raise ValueError("construction requires a base with at least 2 vertices")
    path = hamiltonian_path(base, budget)
    if path is None:
        raise ValueError("base graph has no Hamiltonian path; construction refused")
    cycle: list[ShurikenVertex] = []
    for i in range(1, params.n + 1):
        apex_copy = i if i <= params.t else partner(i, params)
        cycle.append(CopyVertex(path[0], i))
        cycle.append(ApexVertex(apex_copy))
        for x in reversed(path[1:]):
            cycle.append(CopyVertex(x, i))

    shu = build(base, params)
    if len(cycle) != shu.graph.num_vertices or len(set(cycle)) != len(cycle):
        raise RuntimeError("constructed sequence does not visit every vertex once")
    ids = [shu.id_of(sv) for sv in cycle]
    for a, b in zip(ids, ids[1:] + ids[:1]):
        if not shu.graph.has_edge(a, b):
            raise RuntimeError(
                f"constructed cycle uses non-edge "
                f"{shu.graph.label(a)} -- {shu.graph.label(b)}"
            )
    return cycle


def base_has_even_degrees(base: Graph) -> bool:
    return all(d % 2 == 0 for d in base.degrees())


def base_is_eulerian_literal(base: Graph) -> bool:
    """Connected with all degrees even: the textbook Eulerian predicate."""
    return base.edge_count > 0 and is_connected(base) and base_has_even_degrees(base)


def eulerian_characterization(base: Graph, params: ShurikenParams) -> bool:
    """Predicted Eulerian property: t = n, |V| even, and every base degree
    even or n odd.

    The even-degree reading is used for the base condition; a null base is
    rejected since the claim presumes a connected result.
    """
    if base.edge_count == 0:
        raise ValueError("characterization requires a non-null base graph")
    return (
        params.t == params.n
        and base.num_vertices % 2 == 0
        and (base_has_even_degrees(base) or params.n % 2 == 1)
    )


def zagreb_m1_closed(
    params: ShurikenParams, v: int, e: int, m1: int
) -> tuple[int, int]:
    """Published and corrected closed forms for the first Zagreb index.

    The published expression carries 4(n-t)|V| where the degree formulas
    yield 3(n-t)|V|; the two evaluations differ by exactly (n-t)*|V|.
    """
    t, n = params.t, params.n
    paper = (
        n * (n - 1) ** 2 * m1
        + n * v**3
        + (3 * n - 2 * t) * v**2
        + 4 * (n - t) * v
        + (n - t)
        + 4 * (n - 1) * e * (n * v + (n - t))
    )
    corrected = (
        n * (n - 1) ** 2 * m1
        + 4 * e * (n - 1) * (n * v + n - t)
        + (v + 1) * (t * v**2 + (n - t) * (v + 1) ** 2)
    )
    return paper, corrected


def zagreb_m2_closed(params: ShurikenParams, v: int, e: int, m1: int, m2: int) -> int:
    """Published closed form for the second Zagreb index, evaluated
    verbatim; treated by the audit as a claim under test."""
    t, n = params.t, params.n
    half_nt = (n - t) // 2
    return (
        2 * e**2 * (n - 1) ** 2 * (n - t)
        + 2 * e * t * v * (n - 1)
        + 2 * e * v * (n - 1) * (n - t) * (v + 1)
        + 4 * e * v * (n - 1) * (v - 1)
        + 2 * e * (n - 1) * (n - t) * (v + 1)
        - e * (n - t) * (2 * v + 1) * (-n + t + 1)
        - m1 * (n - 1) * (n - t) * (-n + t + 1)
        + t * v**3
        + t * (4 * e**2 - m1) * (n - 1) ** 2
        + v**3 * (v - 1)
        + half_nt * v**2 * (v + 1) ** 2
        + v * (n - t) * (v + 1) ** 2
        + half_nt * (v + 1) ** 2
        + (e * v**2 + m1 * v * (n - 1) + m2 * (n - 1) ** 2)
        * (n**2 - 2 * n * t - n + 2 * t**2)
    )
