"""Command-line interface.

Subcommands: gen, shuriken, invariants, indices, audit, ring, export.
Exit codes: 0 success, 1 invalid input, 2 solver timeout, 3 theorem-audit
failure. Output JSON is deterministic; the audit report keeps wall-clock
timings in a separate field so the report body stays byte-stable.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import audit as audit_mod
from . import rings, serialize, theorems
from .graphs import FAMILIES, Graph, generator
from .indices import m1_direct, m2_direct
from .shuriken import ShurikenParams, build, corrected_size, paper_size
from .solvers import (
    SolverBudget,
    SolverTimeout,
    chromatic_number,
    eulerian_circuit,
    hamiltonian_cycle,
    max_clique,
    max_independent_set,
    min_dominating_set,
)

INVARIANT_NAMES = ("clique", "independence", "domination", "chromatic", "euler", "hamilton")


def _emit(text: str, out: str | None) -> None:
    if out is None:
        sys.stdout.write(text)
    else:
        Path(out).write_text(text, encoding="utf-8")


def _emit_json(payload: dict, out: str | None) -> None:
    _emit(json.dumps(payload, indent=2) + "\n", out)


def _load_graph(path: str) -> Graph:
    return serialize.load_graph(Path(path).read_text(encoding="utf-8"))


def _budget(args: argparse.Namespace) -> SolverBudget:
    wall = getattr(args, "timeout_ms", None)
    if wall is None:
        return SolverBudget()
    return SolverBudget(wall_limit_ms=wall)


def cmd_gen(args: argparse.Namespace) -> int:
    g = generator(args.family, args.order)
    _emit(serialize.dump_graph(g, args.format), args.out)
    return 0


def cmd_shuriken(args: argparse.Namespace) -> int:
    base = _load_graph(args.input)
    params = ShurikenParams(t=args.t, n=args.n)
    built = build(base, params)
    if args.out is not None:
        _emit(serialize.dump_graph(built.graph, args.format), args.out)
    summary = {
        "order": built.graph.num_vertices,
        "size": built.graph.edge_count,
        "paper_size": paper_size(params, base.num_vertices, base.edge_count),
        "corrected_size": corrected_size(params, base.num_vertices, base.edge_count),
    }
    _emit_json(summary, None)
    return 0


def cmd_invariants(args: argparse.Namespace) -> int:
    g = _load_graph(args.input)
    which = [w.strip() for w in args.which.split(",") if w.strip()]
    unknown = [w for w in which if w not in INVARIANT_NAMES]
    if not which or unknown:
        raise ValueError(
            f"--which must name invariants from {INVARIANT_NAMES}, got {args.which!r}"
        )
    budget = _budget(args)
    payload: dict = {}
    timed_out = False
    for name in which:
        try:
            if name == "clique":
                size, witness = max_clique(g, budget)
                payload[name] = {"size": size, "witness": list(witness)}
            elif name == "independence":
                size, witness = max_independent_set(g, budget)
                payload[name] = {"size": size, "witness": list(witness)}
            elif name == "domination":
                size, witness = min_dominating_set(g, budget)
                payload[name] = {"size": size, "witness": list(witness)}
            elif name == "chromatic":
                value, coloring = chromatic_number(g, budget)
                payload[name] = {"value": value, "coloring": list(coloring)}
            elif name == "euler":
                circuit = eulerian_circuit(g)
                payload[name] = {
                    "eulerian": circuit is not None,
                    "circuit": circuit if circuit is not None else None,
                }
            else:
                cycle = hamiltonian_cycle(g, budget)
                payload[name] = {
                    "hamiltonian": cycle is not None,
                    "cycle": list(cycle) if cycle is not None else None,
                }
        except SolverTimeout:
            payload[name] = {"timeout": True}
            timed_out = True
    _emit_json(payload, args.out)
    return 2 if timed_out else 0


def cmd_indices(args: argparse.Namespace) -> int:
    g = _load_graph(args.input)
    payload: dict = {"m1_direct": m1_direct(g), "m2_direct": m2_direct(g)}
    if (args.t is None) != (args.n is None):
        raise ValueError("-t and -n must be given together")
    if args.t is not None:
        params = ShurikenParams(t=args.t, n=args.n)
        built = build(g, params)
        v, e = g.num_vertices, g.edge_count
        m1_paper, m1_corrected = theorems.zagreb_m1_closed(params, v, e, m1_direct(g))
        payload["shuriken"] = {
            "order": built.graph.num_vertices,
            "size": built.graph.edge_count,
            "m1_direct": m1_direct(built.graph),
            "m2_direct": m2_direct(built.graph),
            "m1_paper": m1_paper,
            "m1_corrected": m1_corrected,
            "m2_paper": theorems.zagreb_m2_closed(params, v, e, m1_direct(g), m2_direct(g)),
        }
    _emit_json(payload, args.out)
    return 0


def _parse_params(text: str) -> list[tuple[int, int]]:
    pairs = []
    for chunk in text.split(";"):
        chunk = chunk.strip()
        if not chunk:
            continue
        parts = chunk.split(",")
        if len(parts) != 2:
            raise ValueError(f"malformed parameter pair {chunk!r}, expected 't,n'")
        pairs.append((int(parts[0]), int(parts[1])))
    if not pairs:
        raise ValueError("no parameter pairs given")
    return pairs


def _load_corpus(spec: str) -> list[tuple[str, Graph]]:
    if spec == "builtin":
        return audit_mod.builtin_corpus()
    entries = json.loads(Path(spec).read_text(encoding="utf-8"))
    corpus = []
    for entry in entries:
        corpus.append((entry["name"], serialize.from_json_dict(entry)))
    return corpus


def cmd_audit(args: argparse.Namespace) -> int:
    corpus = _load_corpus(args.corpus)
    param_list = _parse_params(args.params)
    for t, n in param_list:
        ShurikenParams(t=t, n=n)
    report = audit_mod.run_audit(corpus, param_list, _budget(args), args.order_cap)
    _emit(report.to_json(), args.report)
    return 3 if report.failures() else 0


def _make_ring(args: argparse.Namespace) -> rings.FiniteRing:
    if (args.modulus is None) == (args.table is None):
        raise ValueError("give exactly one of --modulus or --table")
    if args.modulus is not None:
        return rings.ModularRing(args.modulus)
    return rings.table_ring_from_json(Path(args.table).read_text(encoding="utf-8"))


def cmd_ring(args: argparse.Namespace) -> int:
    ring = _make_ring(args)
    if args.emit == "idempotents":
        _emit_json(
            {
                "idempotents": rings.idempotents(ring),
                "nontrivial": rings.nontrivial_idempotents(ring),
            },
            args.out,
        )
    elif args.emit == "units":
        ordering = rings.units(ring)
        pairs = [
            [ordering.at(i), ordering.at(ordering.n + ordering.t + 1 - i)]
            for i in range(ordering.t + 1, (ordering.n + ordering.t) // 2 + 1)
        ]
        _emit_json(
            {
                "units": list(ordering.units),
                "t": ordering.t,
                "n": ordering.n,
                "inverse_pairs": pairs,
            },
            args.out,
        )
    elif args.emit == "idempotent-graph":
        _emit(serialize.dump_graph(rings.idempotent_graph(ring), args.format), args.out)
    elif args.emit == "clean-graph":
        _emit(serialize.dump_graph(rings.clean_graph(ring), args.format), args.out)
    else:
        result = rings.clean_as_shuriken(ring)
        _emit_json(
            {
                "verdict": result.verdict,
                "t": result.params.t,
                "n": result.params.n,
                "base_order": result.base.num_vertices,
                "base_size": result.base.edge_count,
                "clean_order": result.clean.num_vertices,
                "clean_size": result.clean.edge_count,
                "bijection": [list(pair) for pair in result.bijection],
                "missing_edges": [list(edge) for edge in result.missing_edges],
                "extra_edges": [list(edge) for edge in result.extra_edges],
            },
            args.out,
        )
    return 0


def cmd_export(args: argparse.Namespace) -> int:
    g = _load_graph(args.input)
    _emit(serialize.dump_graph(g, args.format), args.out)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="shurikengraph",
        description="Build shuriken graphs, solve exact invariants, audit closed forms.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("gen", help="generate a standard graph family")
    p.add_argument("--family", required=True, choices=FAMILIES)
    p.add_argument("--order", required=True, type=int)
    p.add_argument("--out")
    p.add_argument("--format", default="dimacs", choices=("dimacs", "json", "dot"))
    p.set_defaults(handler=cmd_gen)

    p = sub.add_parser("shuriken", help="build the shuriken graph of an input graph")
    p.add_argument("--input", required=True)
    p.add_argument("-t", required=True, type=int)
    p.add_argument("-n", required=True, type=int)
    p.add_argument("--out")
    p.add_argument("--format", default="json", choices=("dimacs", "json", "dot"))
    p.set_defaults(handler=cmd_shuriken)

    p = sub.add_parser("invariants", help="exact invariants with witnesses")
    p.add_argument("--input", required=True)
    p.add_argument("--which", required=True, help=f"comma list from {INVARIANT_NAMES}")
    p.add_argument("--timeout-ms", type=int, default=None)
    p.add_argument("--out")
    p.set_defaults(handler=cmd_invariants)

    p = sub.add_parser("indices", help="Zagreb indices, direct and closed-form")
    p.add_argument("--input", required=True)
    p.add_argument("-t", type=int, default=None)
    p.add_argument("-n", type=int, default=None)
    p.add_argument("--out")
    p.set_defaults(handler=cmd_indices)

    p = sub.add_parser("audit", help="audit closed forms against exact solvers")
    p.add_argument("--corpus", default="builtin")
    p.add_argument("--params", required=True, help="semicolon-separated t,n pairs")
    p.add_argument("--report")
    p.add_argument("--order-cap", type=int, default=audit_mod.DEFAULT_ORDER_CAP)
    p.add_argument("--timeout-ms", type=int, default=None)
    p.set_defaults(handler=cmd_audit)

    p = sub.add_parser("ring", help="idempotent/clean graphs over a finite ring")
    p.add_argument("--modulus", type=int, default=None)
    p.add_argument("--table", default=None)
    p.add_argument(
        "--emit",
        required=True,
        choices=("idempotents", "units", "idempotent-graph", "clean-graph", "correspondence"),
    )
    p.add_argument("--format", default="json", choices=("dimacs", "json", "dot"))
    p.add_argument("--out")
    p.set_defaults(handler=cmd_ring)

    p = sub.add_parser("export", help="convert a graph file between formats")
    p.add_argument("--input", required=True)
    p.add_argument("--format", required=True, choices=("dimacs", "json", "dot"))
    p.add_argument("--out")
    p.set_defaults(handler=cmd_export)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 0 if exc.code == 0 else 1
    try:
        return args.handler(args)
    except (ValueError, OSError, json.JSONDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


def entrypoint() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entrypoint()
