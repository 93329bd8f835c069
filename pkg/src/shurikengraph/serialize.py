"""Graph serialization: DIMACS edge format, JSON, and DOT export.

DIMACS: header line ``p edge <n> <m>`` followed by ``m`` lines
``e <u> <v>`` with 1-based vertex ids; ``c`` lines are comments.
JSON: object with ``num_vertices``, ``edges`` (0-based 2-arrays) and
optional ``labels``. DOT output is for visualization only and is not
parsed back.
"""

from __future__ import annotations

import json

from .graphs import Graph, from_edge_list


def to_dimacs(g: Graph) -> str:
    lines = [f"p edge {g.num_vertices} {g.edge_count}"]
    lines += [f"e {u + 1} {v + 1}" for u, v in g.edges]
    return "\n".join(lines) + "\n"


def from_dimacs(text: str) -> Graph:
    order: int | None = None
    declared = 0
    edges: list[tuple[int, int]] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("c"):
            continue
        tokens = line.split()
        if tokens[0] == "p":
            if len(tokens) != 4 or tokens[1].lower() != "edge":
                raise ValueError(f"line {lineno}: malformed problem line {line!r}")
            if order is not None:
                raise ValueError(f"line {lineno}: duplicate problem line")
            order, declared = int(tokens[2]), int(tokens[3])
        elif tokens[0] == "e":
            if len(tokens) != 3:
                raise ValueError(f"line {lineno}: malformed edge line {line!r}")
            if order is None:
                raise ValueError(f"line {lineno}: edge before problem line")
            edges.append((int(tokens[1]) - 1, int(tokens[2]) - 1))
        else:
            raise ValueError(f"line {lineno}: unknown line type {line!r}")
    if order is None:
        raise ValueError("missing 'p edge' problem line")
    g = from_edge_list(order, edges)
    if g.edge_count != declared and len(edges) != declared:
        raise ValueError(f"declared {declared} edges, found {len(edges)}")
    return g


def to_json_dict(g: Graph) -> dict:
    payload: dict = {
        "num_vertices": g.num_vertices,
        "edges": [[u, v] for u, v in g.edges],
    }
    if g.labels is not None:
        payload["labels"] = list(g.labels)
    return payload


def to_json(g: Graph) -> str:
    return json.dumps(to_json_dict(g), indent=2) + "\n"


def from_json_dict(payload: dict) -> Graph:
    try:
        order = payload["num_vertices"]
        edges = [tuple(edge) for edge in payload["edges"]]
    except (KeyError, TypeError) as exc:
        raise ValueError(f"malformed graph object: {exc}") from exc
    labels = payload.get("labels")
    return from_edge_list(order, edges, labels)


def from_json(text: str) -> Graph:
    return from_json_dict(json.loads(text))


def to_dot(g: Graph, name: str = "G") -> str:
    lines = [f"graph {name} {{"]
    for v in range(g.num_vertices):
        lines.append(f'  {v} [label="{g.label(v)}"];')
    for u, v in g.edges:
        lines.append(f"  {u} -- {v};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def load_graph(text: str) -> Graph:
    """Parse a graph from DIMACS or JSON, sniffing the format."""
    stripped = text.lstrip()
    if stripped.startswith("{"):
        return from_json(text)
    return from_dimacs(text)


def dump_graph(g: Graph, fmt: str) -> str:
    if fmt == "dimacs":
        return to_dimacs(g)
    if fmt == "json":
        return to_json(g)
    if fmt == "dot":
        return to_dot(g)
    raise ValueError(f"unknown format {fmt!r}, expected dimacs, json, or dot")
