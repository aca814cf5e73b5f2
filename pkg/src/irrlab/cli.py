"""Command-line front end: check, solve, decompose, sweep, cases, export.

Outputs are JSON on stdout (colorings serialize as maps from ``u->v`` strings
to color numbers).  Every command is deterministic given its inputs.  Exit
status: 0 on success, 1 on a verification failure or, with ``--strict``, a
counterexample or non-extendable case; 2 on usage or input format errors.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import cactus, constructive, sweeps
from .digraph import Arc, Digraph, SimpleGraph, proper_color_skeleton, skeleton
from .irregularity import ArcColoring, Certificate, Mode, verify_coloring
from .solver import exact_index, node_budget

USAGE_ERROR = 2


class InputError(ValueError):
    """Bad file contents; reported with the offending line number."""


def parse_edge_list(text: str, as_graph: bool = False) -> Digraph | SimpleGraph:
    """Parse the edge-list format: header ``n m``, then m lines ``u v``.

    A trailing ``2`` on an arc line inserts both directions.  Lines starting
    with ``#`` are ignored.  In graph mode lines are unordered edges.
    """
    header: tuple[int, int] | None = None
    arcs: list[Arc] = []
    edges: list[Arc] = []
    declared = 0
    data_lines = 0
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        fields = line.split()
        if header is None:
            if len(fields) != 2:
                raise InputError(f"line {lineno}: expected header 'n m'")
            try:
                n, declared = int(fields[0]), int(fields[1])
            except ValueError as exc:
                raise InputError(f"line {lineno}: header must be two integers") from exc
            header = (n, declared)
            continue
        if len(fields) not in (2, 3):
            raise InputError(f"line {lineno}: expected 'u v' or 'u v 2'")
        try:
            u, v = int(fields[0]), int(fields[1])
        except ValueError as exc:
            raise InputError(f"line {lineno}: endpoints must be integers") from exc
        data_lines += 1
        if len(fields) == 3:
            if as_graph:
                raise InputError(f"line {lineno}: the pair marker is not valid in graph mode")
            if fields[2] != "2":
                raise InputError(f"line {lineno}: the only valid marker is '2'")
            arcs.append((u, v))
            arcs.append((v, u))
        elif as_graph:
            edges.append((u, v))
        else:
            arcs.append((u, v))
    if header is None:
        raise InputError("empty input: missing 'n m' header")
    if data_lines != header[1]:
        raise InputError(
            f"header declares {header[1]} arc lines but {data_lines} were found"
        )
    try:
        if as_graph:
            return SimpleGraph(header[0], edges)
        return Digraph(header[0], arcs)
    except ValueError as exc:
        raise InputError(str(exc)) from exc


def _arc_key(arc: Arc) -> str:
    return f"{arc[0]}->{arc[1]}"


def _parse_arc_key(key: str) -> Arc:
    try:
        u, v = key.split("->")
        return (int(u), int(v))
    except ValueError as exc:
        raise InputError(f"bad arc key {key!r}; expected 'u->v'") from exc


def coloring_to_json(coloring: ArcColoring) -> dict:
    return {
        "num_colors": coloring.num_colors,
        "colors": {_arc_key(a): c for a, c in sorted(coloring.colors.items())},
    }


def coloring_from_json(data: dict) -> ArcColoring:
    colors = {_parse_arc_key(k): v for k, v in data["colors"].items()}
    return ArcColoring(colors, data["num_colors"])


def certificate_to_json(cert: Certificate) -> dict:
    return {
        "mode": cert.mode.value,
        "verdict": cert.verdict,
        "violations": [
            {
                "arc": _arc_key(v.arc),
                "color": v.color,
                "values": [list(v.tail_value) if isinstance(v.tail_value, tuple) else v.tail_value,
                           list(v.head_value) if isinstance(v.head_value, tuple) else v.head_value],
            }
            for v in cert.violations
        ],
    }


PALETTE = (
    "red", "blue", "green", "orange", "purple", "brown",
    "cyan", "magenta", "gold", "gray", "pink", "olive",
)


def export_dot(d: Digraph, coloring: ArcColoring | None = None) -> str:
    """DOT text with one line per arc in lexicographic order."""
    lines = ["digraph irrlab {"]
    for v in range(d.n):
        lines.append(f"  {v};")
    for u, v in d.arc_seq():
        if coloring is not None:
            idx = (coloring.colors[(u, v)] - 1) % len(PALETTE)
            lines.append(f'  {u} -> {v} [color="{PALETTE[idx]}"];')
        else:
            lines.append(f"  {u} -> {v};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def _read_input(path: str, as_graph: bool) -> Digraph | SimpleGraph:
    with open(path, encoding="utf-8") as fh:
        return parse_edge_list(fh.read(), as_graph=as_graph)


def _decompose(d: Digraph, strategy: str, mode: Mode) -> ArcColoring:
    if strategy == "auto":
        _, coloring = constructive.auto_decompose(d, mode)
        return coloring
    if strategy == "bipartite":
        return _scheme_by_size(d, mode, 2)
    if strategy == "tripartite":
        return _scheme_by_size(d, mode, 3)
    if strategy == "sixpartite":
        return _scheme_by_size(d, mode, 6)
    if strategy == "chromatic":
        return constructive.chromatic_pipeline(d, mode)
    if strategy == "tournament":
        if mode is not Mode.WEAK:
            raise constructive.ConstructionError("the tournament scheme is a weak-mode construction")
        return constructive.color_tournament(d)
    if strategy == "symmetric":
        return constructive.decompose_symmetric(d, mode)
    if strategy == "regular":
        if mode is not Mode.WEAK:
            raise constructive.ConstructionError("the regular-orientation scheme is a weak-mode construction")
        return constructive.decompose_regular_orientation(d)
    if strategy == "eulerian":
        if mode is not Mode.STRONG:
            raise constructive.ConstructionError("the Eulerian scheme is a strong-mode construction")
        return constructive.color_eulerian_strong(d)
    if strategy == "reduce":
        return _reduce_strategy(d, mode)
    raise constructive.ConstructionError(f"unknown strategy {strategy!r}")


def _scheme_by_size(d: Digraph, mode: Mode, max_parts: int) -> ArcColoring:
    g = skeleton(d)
    parts = proper_color_skeleton(g, exact=g.n <= 10)
    if len(parts.parts) > max_parts:
        raise constructive.ConstructionError(
            f"skeleton needs {len(parts.parts)} parts, more than the scheme's {max_parts}"
        )
    from .digraph import PartitionedSkeleton

    want = max_parts if mode is Mode.WEAK and max_parts > 3 else max(len(parts.parts), 2)
    if mode is Mode.STRONG and max_parts == 3 and len(parts.parts) > 2:
        want = 3
    padded = PartitionedSkeleton(
        parts.graph,
        tuple(parts.parts) + (frozenset(),) * (want - len(parts.parts)),
        parts.chromatic_exact,
    )
    return constructive.partition_scheme_coloring(d, padded, mode)


def _reduce_strategy(d: Digraph, mode: Mode) -> ArcColoring:
    extra, rest = constructive.reduce_bidirectional(d, mode)
    _, rest_coloring = constructive.auto_decompose(rest, mode)
    colors = dict(rest_coloring.colors)
    extra_class = rest_coloring.num_colors + 1
    for arc in extra.arcs:
        colors[arc] = extra_class
    merged = ArcColoring(colors, extra_class) if colors else ArcColoring({}, 2)
    cert = verify_coloring(d, merged, mode)
    if not cert.verdict:
        raise AssertionError("reduce strategy produced a non-verifying coloring")
    return merged


def _print(data: dict) -> None:
    json.dump(data, sys.stdout, indent=1, sort_keys=True)
    sys.stdout.write("\n")


def _cmd_check(args: argparse.Namespace) -> int:
    mode = Mode(args.mode)
    target = _read_input(args.file, as_graph=mode is Mode.GRAPH)
    if args.coloring:
        with open(args.coloring, encoding="utf-8") as fh:
            coloring = coloring_from_json(json.load(fh))
        cert = verify_coloring(target, coloring, mode)
    else:
        from .irregularity import is_irregular, is_irregular_graph

        cert = (
            is_irregular_graph(target)
            if mode is Mode.GRAPH
            else is_irregular(target, mode)
        )
    _print(certificate_to_json(cert))
    return 0 if cert.verdict else 1


def _cmd_solve(args: argparse.Namespace) -> int:
    mode = Mode(args.mode)
    target = _read_input(args.file, as_graph=mode is Mode.GRAPH)
    result = exact_index(target, mode, max_colors=args.max_colors, budget=node_budget())
    payload = {
        "index": result.index,
        "nodes_explored": result.nodes_explored,
        "budget_hit": result.budget_hit,
        "searched_up_to": result.searched_up_to,
        "infeasible": result.infeasible,
        "witness": coloring_to_json(result.witness) if result.witness else None,
    }
    _print(payload)
    return 0


def _cmd_decompose(args: argparse.Namespace) -> int:
    mode = Mode(args.mode)
    if mode not in (Mode.WEAK, Mode.STRONG):
        raise constructive.ConstructionError("decompose supports weak and strong modes")
    d = _read_input(args.file, as_graph=False)
    coloring = _decompose(d, args.strategy, mode)
    cert = verify_coloring(d, coloring, mode)
    _print({"coloring": coloring_to_json(coloring), "certificate": certificate_to_json(cert)})
    return 0 if cert.verdict else 1


def _cmd_sweep(args: argparse.Namespace) -> int:
    mode = Mode(args.mode)
    graph = None
    if args.graph:
        parsed = _read_input(args.graph, as_graph=True)
        graph = parsed
    report = sweeps.sweep(
        args.family,
        args.n,
        mode,
        args.bound,
        strategy=args.strategy,
        jobs=args.jobs,
        graph=graph,
        out_path=args.out,
        resume_from=args.resume,
    )
    _print(report.deterministic_fields() | {"wall_time": report.wall_time})
    if args.strict and report.counterexamples:
        return 1
    return 0


def _cmd_cases(args: argparse.Namespace) -> int:
    claim = {"ii": "part_ii"}.get(args.claim, args.claim)
    report = cactus.sweep_cases(claim, jobs=args.jobs)
    payload = {
        "schema": sweeps.SCHEMA,
        "kind": "case-sweep",
        "claim": report.claim,
        "raw_slots": report.raw_slots,
        "configurations": report.configurations,
        "extendable": report.extendable,
        "non_extendable": [
            {
                "core_arcs": [[a.tail, a.head, a.color] for a in v.spec.core_arcs],
                "boundary": {
                    name: {str(c): val for c, val in cols}
                    for name, cols in v.spec.boundary
                },
                "stubs": {name: list(ab) for name, ab in v.spec.stubs},
            }
            for v in report.non_extendable
        ],
    }
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            json.dump(payload, fh, indent=1, sort_keys=True)
            fh.write("\n")
    _print(payload)
    if args.strict and report.non_extendable:
        return 1
    return 0


def _cmd_export(args: argparse.Namespace) -> int:
    d = _read_input(args.file, as_graph=False)
    coloring = None
    if args.coloring:
        with open(args.coloring, encoding="utf-8") as fh:
            coloring = coloring_from_json(json.load(fh))
    text = export_dot(d, coloring)
    with open(args.dot, "w", encoding="utf-8") as fh:
        fh.write(text)
    _print({"written": args.dot, "arcs": d.m})
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="irrlab",
        description="Locally irregular arc colorings of digraphs: verify, solve, decompose, sweep.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    modes = [m.value for m in Mode]
    p = sub.add_parser("check", help="verify a digraph, graph, or coloring")
    p.add_argument("--mode", required=True, choices=modes)
    p.add_argument("--coloring", help="JSON coloring to verify (omit to check the input itself)")
    p.add_argument("file")
    p.set_defaults(func=_cmd_check)

    p = sub.add_parser("solve", help="exact irregular chromatic index")
    p.add_argument("--mode", required=True, choices=modes)
    p.add_argument("--max-colors", type=int, default=None)
    p.add_argument("file")
    p.set_defaults(func=_cmd_solve)

    p = sub.add_parser("decompose", help="constructive decomposition")
    p.add_argument(
        "--strategy",
        required=True,
        choices=[
            "bipartite", "tripartite", "sixpartite", "chromatic", "tournament",
            "symmetric", "regular", "eulerian", "reduce", "auto",
        ],
    )
    p.add_argument("--mode", required=True, choices=["weak", "strong"])
    p.add_argument("file")
    p.set_defaults(func=_cmd_decompose)

    p = sub.add_parser("sweep", help="exhaustive family sweep")
    p.add_argument(
        "--family",
        required=True,
        choices=[
            "all_digraphs", "tournaments", "symmetric", "eulerian",
            "unicyclic_orientations", "cactus_orientations",
            "orientations_of", "skeleton_digraphs",
        ],
    )
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--mode", required=True, choices=["weak", "strong", "pp", "mm"])
    p.add_argument("--bound", type=int, required=True)
    p.add_argument("--strategy", default="exact", choices=["exact", "constructive_first"])
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--graph", help="base graph file for the graph-parameterized families")
    p.add_argument("--out", help="write/update the JSON report here")
    p.add_argument("--resume", help="resume from a checkpoint report")
    p.add_argument("--strict", action="store_true", help="exit 1 when a counterexample is found")
    p.set_defaults(func=_cmd_sweep)

    p = sub.add_parser("cases", help="finite case analyses around pendant cycles")
    p.add_argument("--claim", required=True, choices=["c1", "c2", "c3", "c5", "ii", "part_ii"])
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--out")
    p.add_argument("--strict", action="store_true", help="exit 1 when a case fails to extend")
    p.set_defaults(func=_cmd_cases)

    p = sub.add_parser("export", help="write a DOT file")
    p.add_argument("--dot", required=True)
    p.add_argument("--coloring")
    p.add_argument("file")
    p.set_defaults(func=_cmd_export)

    return parser


def dispatch(argv: list[str]) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return USAGE_ERROR if exc.code not in (0,) else 0
    try:
        return args.func(args)
    except InputError as exc:
        print(f"input error: {exc}", file=sys.stderr)
        return USAGE_ERROR
    except FileNotFoundError as exc:
        print(f"input error: {exc}", file=sys.stderr)
        return USAGE_ERROR
    except (constructive.ConstructionError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return USAGE_ERROR


def main() -> None:
    sys.exit(dispatch(sys.argv[1:]))
