"""Exact, deterministic solvers for NP-hard graph invariants.

These are the ground-truth oracles for the audit layer: branch-and-bound
maximum clique with greedy-coloring bounds, DSATUR-style exact chromatic
number, ascending-target minimum dominating set, Hierholzer's Euler
circuit, and backtracking Hamiltonian cycle/path search.

Every solver ties its search order to ascending vertex ids, so identical
inputs yield identical witnesses. Exceeding a budget raises
``SolverTimeout`` rather than ever returning a wrong answer.
"""

from __future__ import annotations

import time
from dataclasses import dataclass

from .graphs import Graph, complement, is_connected


class SolverTimeout(Exception):
    """Raised when a solver exhausts its node or wall-clock budget."""


@dataclass(frozen=True)
class SolverBudget:
    max_nodes: int = 200_000_000
    wall_limit_ms: int = 120_000


class _Ticker:
    """Per-invocation budget state; tick() at every search-tree node."""

    __slots__ = ("nodes", "max_nodes", "deadline", "label")

    def __init__(self, budget: SolverBudget, label: str):
        self.nodes = 0
        self.max_nodes = budget.max_nodes
        self.deadline = time.monotonic() + budget.wall_limit_ms / 1000.0
        self.label = label

    def tick(self) -> None:
        self.nodes += 1
        if self.nodes > self.max_nodes:
            raise SolverTimeout(f"{self.label}: node budget exhausted ({self.max_nodes})")
        if (self.nodes == 1 or self.nodes % 1024 == 0) and time.monotonic() > self.deadline:
            raise SolverTimeout(f"{self.label}: wall-clock budget exhausted")


def _bits(mask: int):
    """Iterate set bit indices of mask in ascending order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def max_clique(g: Graph, budget: SolverBudget | None = None) -> tuple[int, tuple[int, ...]]:
    """Maximum clique size and a witness vertex set."""
    ticker = _Ticker(budget or SolverBudget(), "max_clique")
    n = g.num_vertices
    if n == 0:
        return 0, ()
    adj = g.adjacency
    best_size = 0
    best_mask = 0

    def color_order(candidates: int) -> list[tuple[int, int]]:
        # Greedy coloring over ascending ids; a vertex in class c can
        # extend the clique by at most c, so classes give prune bounds.
        order: list[tuple[int, int]] = []
        uncolored = candidates
        color = 0
        while uncolored:
            color += 1
            avail = uncolored
            while avail:
                v = (avail & -avail).bit_length() - 1
                order.append((v, color))
                uncolored ^= 1 << v
                avail &= ~adj[v]
                avail ^= 1 << v
        return order

    def expand(mask: int, size: int, candidates: int) -> None:
        nonlocal best_size, best_mask
        ticker.tick()
        if candidates == 0:
            if size > best_size:
                best_size, best_mask = size, mask
            return
        order = color_order(candidates)
        for v, bound in reversed(order):
            if size + bound <= best_size:
                return
            expand(mask | (1 << v), size + 1, candidates & adj[v])
            candidates ^= 1 << v

    expand(0, 0, (1 << n) - 1)
    return best_size, tuple(_bits(best_mask))


def max_independent_set(
    g: Graph, budget: SolverBudget | None = None
) -> tuple[int, tuple[int, ...]]:
    """Maximum independent set, computed as a clique of the complement."""
    return max_clique(complement(g), budget)


def _greedy_dsatur_coloring(g: Graph) -> list[int]:
    """Greedy DSATUR coloring (1-based colors); an upper bound for chi."""
    n = g.num_vertices
    colors = [0] * n
    neighbor_colors: list[set[int]] = [set() for _ in range(n)]
    for _ in range(n):
        pick = -1
        key = (-1, -1, 0)
        for v in range(n):
            if colors[v]:
                continue
            cand = (len(neighbor_colors[v]), g.adjacency[v].bit_count(), -v)
            if cand > key:
                key, pick = cand, v
        c = 1
        while c in neighbor_colors[pick]:
            c += 1
        colors[pick] = c
        for w in _bits(g.adjacency[pick]):
            neighbor_colors[w].add(c)
    return colors


def chromatic_number(
    g: Graph, budget: SolverBudget | None = None
) -> tuple[int, tuple[int, ...]]:
    """Exact chromatic number with a proper coloring using exactly that
    many colors; optimality is certified by exhausted search below it."""
    spec = budget or SolverBudget()
    n = g.num_vertices
    if n == 0:
        return 0, ()
    lower, clique = max_clique(g, spec)
    greedy = _greedy_dsatur_coloring(g)
    upper = max(greedy)
    if lower == upper:
        return upper, tuple(greedy)
    ticker = _Ticker(spec, "chromatic_number")
    adj = g.adjacency

    def try_color(k: int) -> list[int] | None:
        colors = [0] * n
        # pre-color a maximum clique: its vertices need distinct colors
        for idx, v in enumerate(clique, start=1):
            colors[v] = idx
        used = len(clique)

        def solve(remaining: int) -> bool:
            nonlocal used
            ticker.tick()
            if remaining == 0:
                return True
            pick = -1
            key = (-1, -1, 0)
            for v in range(n):
                if colors[v]:
                    continue
                sat = len({colors[w] for w in _bits(adj[v])} - {0})
                cand = (sat, adj[v].bit_count(), -v)
                if cand > key:
                    key, pick = cand, v
            forbidden = {colors[w] for w in _bits(adj[pick])}
            limit = min(k, used + 1)
            for c in range(1, limit + 1):
                if c in forbidden:
                    continue
                colors[pick] = c
                bumped = c > used
                if bumped:
                    used += 1
                if solve(remaining - 1):
                    return True
                colors[pick] = 0
                if bumped:
                    used -= 1
            return False

        return list(colors) if solve(n - len(clique)) else None

    for k in range(lower, upper):
        found = try_color(k)
        if found is not None:
            return k, tuple(found)
    return upper, tuple(greedy)


def min_dominating_set(
    g: Graph, budget: SolverBudget | None = None
) -> tuple[int, tuple[int, ...]]:
    """Minimum dominating set via ascending-target search with a greedy
    upper bound; requires at least one vertex."""
    if g.num_vertices == 0:
        raise ValueError("domination is undefined for the 0-vertex graph")
    ticker = _Ticker(budget or SolverBudget(), "min_dominating_set")
    n = g.num_vertices
    full = (1 << n) - 1
    closed = [g.adjacency[v] | (1 << v) for v in range(n)]

    greedy: list[int] = []
    undominated = full
    while undominated:
        pick = max(range(n), key=lambda v: ((closed[v] & undominated).bit_count(), -v))
        greedy.append(pick)
        undominated &= ~closed[pick]
    upper = len(greedy)

    max_cover = max(row.bit_count() for row in closed)
    lower = -(-n // max_cover)

    chosen: list[int] = []
    result: list[int] | None = None

    def search(undominated: int, k: int) -> bool:
        nonlocal result
        ticker.tick()
        if undominated == 0:
            result = list(chosen)
            return True
        if len(chosen) == k:
            return False
        best_cover = 0
        for v in range(n):
            cover = (closed[v] & undominated).bit_count()
            if cover > best_cover:
                best_cover = cover
        need = -(-undominated.bit_count() // best_cover)
        if len(chosen) + need > k:
            return False
        # branch on a hardest-to-cover vertex: every dominating set must
        # pick from its closed neighborhood
        target = -1
        fewest = n + 2
        for v in _bits(undominated):
            options = closed[v].bit_count()
            if options < fewest:
                fewest, target = options, v
        for w in _bits(closed[target]):
            chosen.append(w)
            if search(undominated & ~closed[w], k):
                return True
            chosen.pop()
        return False

    for k in range(lower, upper):
        if search(full, k):
            assert result is not None
            return len(result), tuple(sorted(result))
    return upper, tuple(sorted(greedy))


def eulerian_circuit(g: Graph) -> list[int] | None:
    """Euler circuit as a closed vertex walk, or None when none exists.

    Exists iff every degree is even and the graph is connected once
    isolated vertices are ignored; the edgeless graph has the empty
    circuit. Walk length in edges is len(walk) - 1.
    """
    if g.edge_count == 0:
        return []
    degrees = g.degrees()
    if any(d % 2 for d in degrees):
        return None
    support = [v for v in range(g.num_vertices) if degrees[v] > 0]
    seen = {support[0]}
    stack = [support[0]]
    while stack:
        u = stack.pop()
        for w in _bits(g.adjacency[u]):
            if w not in seen:
                seen.add(w)
                stack.append(w)
    if len(seen) != len(support):
        return None

    remaining = list(g.adjacency)
    walk: list[int] = []
    path = [support[0]]
    while path:
        v = path[-1]
        if remaining[v]:
            w = (remaining[v] & -remaining[v]).bit_length() - 1
            remaining[v] ^= 1 << w
            remaining[w] ^= 1 << v
            path.append(w)
        else:
            walk.append(path.pop())
    walk.reverse()
    assert len(walk) == g.edge_count + 1
    return walk


def hamiltonian_cycle(
    g: Graph, budget: SolverBudget | None = None
) -> tuple[int, ...] | None:
    """A Hamiltonian cycle as a vertex sequence (closure implicit), or
    None; absence is certified by exhausted backtracking.

    Backtracking extends toward the neighbor with fewest onward options
    first and prunes any state that strands a vertex with fewer than two
    usable cycle connections.
    """
    ticker = _Ticker(budget or SolverBudget(), "hamiltonian_cycle")
    n = g.num_vertices
    if n == 0:
        return None
    if n == 1:
        return (0,)
    if n == 2:
        return None
    if not is_connected(g) or any(d < 2 for d in g.degrees()):
        return None
    adj = g.adjacency
    path = [0]
    visited = 1

    def extend() -> bool:
        nonlocal visited
        ticker.tick()
        v = path[-1]
        if len(path) == n:
            return bool(adj[v] & 1)
        rest = ~visited
        # every unvisited vertex still needs two cycle edges, drawn from
        # unvisited vertices, the current endpoint, or the start vertex
        for w in _bits(rest & ((1 << n) - 1)):
            options = (adj[w] & rest).bit_count() + (adj[w] >> v & 1) + (adj[w] & 1)
            if options < 2:
                return False
        candidates = sorted(
            _bits(adj[v] & rest),
            key=lambda w: ((adj[w] & rest).bit_count(), w),
        )
        for w in candidates:
            path.append(w)
            visited |= 1 << w
            if extend():
                return True
            path.pop()
            visited ^= 1 << w
        return False

    return tuple(path) if extend() else None


def hamiltonian_path(
    g: Graph, budget: SolverBudget | None = None
) -> tuple[int, ...] | None:
    """A Hamiltonian path as a vertex sequence, or None."""
    ticker = _Ticker(budget or SolverBudget(), "hamiltonian_path")
    n = g.num_vertices
    if n == 0:
        return ()
    if n == 1:
        return (0,)
    if not is_connected(g):
        return None
    adj = g.adjacency
    path: list[int] = []
    visited = 0

    def extend() -> bool:
        nonlocal visited
        ticker.tick()
        if len(path) == n:
            return True
        v = path[-1]
        rest = ~visited
        # at most one unvisited vertex (the far endpoint) may be left
        # with a single usable connection, and none with zero
        short = 0
        for w in _bits(rest & ((1 << n) - 1)):
            options = (adj[w] & rest).bit_count() + (adj[w] >> v & 1)
            if options == 0:
                return False
            if options == 1:
                short += 1
                if short > 1:
                    return False
        candidates = sorted(
            _bits(adj[v] & rest),
            key=lambda w: ((adj[w] & rest).bit_count(), w),
        )
        for w in candidates:
            path.append(w)
            visited |= 1 << w
            if extend():
                return True
            path.pop()
            visited ^= 1 << w
        return False

    for start in range(n):
        path = [start]
        visited = 1 << start
        if extend():
            return tuple(path)
    return None
