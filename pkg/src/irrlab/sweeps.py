"""Exhaustive family sweeps with persisted, resumable reports.

A sweep enumerates a digraph family in a fixed order, computes the exact
irregular chromatic index of every instance, and aggregates a histogram plus
any instances exceeding the conjectured bound.  Work is split into contiguous
chunks merged in order, so reports are identical for any worker count; a
checkpoint written after each merged chunk makes long sweeps resumable.

A counterexample is a recorded research output, not an error: the sweep
finishes normally and lists the offending digraphs in the report.
"""

from __future__ import annotations

import itertools
import json
import multiprocessing
import os
import time
from dataclasses import asdict, dataclass, field

from . import kernel
from .digraph import Arc, Digraph, SimpleGraph, iter_family_arcs
from .irregularity import Mode
from .solver import node_budget

SCHEMA = "irrlab-report/1"

#: Modes with a guaranteed finite index for every digraph.
_SWEEP_MODES = (Mode.WEAK, Mode.STRONG, Mode.PP, Mode.MM)


@dataclass
class SweepReport:
    family: str
    n: int
    mode: str
    bound: int
    strategy: str
    instances: int = 0
    histogram: dict[int, int] = field(default_factory=dict)
    counterexamples: list[dict] = field(default_factory=list)
    budget_incidents: list[dict] = field(default_factory=list)
    wall_time: float = 0.0
    cursor: int = 0
    complete: bool = False
    schema: str = SCHEMA

    @property
    def max_index(self) -> int | None:
        return max(self.histogram) if self.histogram else None

    def key(self) -> tuple:
        return (self.family, self.n, self.mode, self.bound, self.strategy)

    def deterministic_fields(self) -> dict:
        data = asdict(self)
        data.pop("wall_time")
        return data


def encode_arcs(n: int, arcs: list[Arc]) -> str:
    lines = [f"{n} {len(arcs)}"]
    lines += [f"{u} {v}" for u, v in sorted(arcs)]
    return "\n".join(lines)


def _exact_instance_index(n: int, arcs: list[Arc], mode_code: int, budget: int) -> tuple[int | None, int, bool]:
    """(index, nodes, budget_hit) for one raw instance, counts tried upward."""
    m = len(arcs)
    if m == 0:
        return 0, 0, False
    ordered = sorted(arcs)
    total = 0
    for c in range(1, m + 1):
        status, _colors, nodes = kernel.search_coloring(
            n, ordered, mode_code, c, None, True, budget - total
        )
        total += nodes
        if status == kernel.FOUND:
            return c, total, False
        if status == kernel.BUDGET_HIT:
            return None, total, True
    return None, total, False


def _constructive_upper_bound(n: int, arcs: list[Arc], mode: Mode) -> int | None:
    from .constructive import auto_decompose

    d = Digraph._from_trusted(n, frozenset(arcs))
    try:
        _, coloring = auto_decompose(d, mode)
    except Exception:
        return None
    return coloring.nonempty_class_count() if d.m else 0


def _solve_instance(
    n: int, arcs: list[Arc], mode: Mode, strategy: str, budget: int
) -> tuple[int | None, int, bool]:
    mode_code = kernel.MODE_CODES[mode.value]
    if strategy == "exact":
        return _exact_instance_index(n, arcs, mode_code, budget)
    if strategy != "constructive_first":
        raise ValueError(f"unknown strategy {strategy!r}")
    ub = _constructive_upper_bound(n, arcs, mode)
    if ub is None:
        return _exact_instance_index(n, arcs, mode_code, budget)
    # The construction proves feasibility at ub; only smaller counts need a
    # search, so the histogram matches the exact strategy bit for bit.
    ordered = sorted(arcs)
    total = 0
    for c in range(1, ub):
        status, _colors, nodes = kernel.search_coloring(
            n, ordered, mode_code, c, None, True, budget - total
        )
        total += nodes
        if status == kernel.FOUND:
            return c, total, False
        if status == kernel.BUDGET_HIT:
            return None, total, True
    return ub, total, False


_WORKER_STATE: dict = {}


def _init_worker(family, n, mode_value, strategy, budget, graph_edges, graph_n, cross_check):
    _WORKER_STATE.update(
        family=family,
        n=n,
        mode=Mode(mode_value),
        strategy=strategy,
        budget=budget,
        graph=SimpleGraph(graph_n, graph_edges) if graph_edges is not None else None,
        cross_check=cross_check,
    )


def _run_chunk(span: tuple[int, int]) -> dict:
    start, stop = span
    stream = itertools.islice(
        iter_family_arcs(
            _WORKER_STATE["family"], _WORKER_STATE["n"], _WORKER_STATE["graph"], start
        ),
        stop - start,
    )
    return _process_chunk(
        stream,
        (start, stop),
        _WORKER_STATE["mode"],
        _WORKER_STATE["strategy"],
        _WORKER_STATE["budget"],
        _WORKER_STATE["cross_check"],
    )


def _process_chunk(stream, span, mode, strategy, budget, cross_check) -> dict:
    hist: dict[int, int] = {}
    incidents: list[dict] = []
    count = 0
    processed = 0
    for size, arcs in stream:
        offset = processed
        processed += 1
        index, _nodes, hit = _solve_instance(size, arcs, mode, strategy, budget)
        if hit:
            incidents.append({"cursor": span[0] + offset, "digraph": encode_arcs(size, arcs)})
            continue
        hist[index] = hist.get(index, 0) + 1
        count += 1
        if cross_check is not None:
            _cross_check_instance(size, arcs, mode, index, cross_check)
    return {
        "span": span,
        "count": count,
        "processed": processed,
        "histogram": hist,
        "incidents": incidents,
    }


def _cross_check_instance(size: int, arcs: list[Arc], mode: Mode, index: int, op_name: str) -> None:
    """Run the matching constructive operation and compare class counts."""
    from . import constructive
    from .cactus import color_unicyclic_strong
    from .irregularity import verify_coloring

    d = Digraph._from_trusted(size, frozenset(arcs))
    if d.m == 0:
        return
    if op_name == "tournament":
        coloring = constructive.color_tournament(d)
    elif op_name == "symmetric":
        coloring = constructive.decompose_symmetric(d, mode)
    elif op_name == "eulerian":
        coloring = constructive.color_eulerian_strong(d)
    elif op_name == "unicyclic":
        coloring = color_unicyclic_strong(d)
    elif op_name == "auto":
        _, coloring = constructive.auto_decompose(d, mode)
    else:
        raise ValueError(f"unknown cross-check operation {op_name!r}")
    if not verify_coloring(d, coloring, mode).verdict:
        raise AssertionError(f"constructive {op_name} failed to verify on {encode_arcs(size, arcs)}")
    if index > coloring.nonempty_class_count():
        raise AssertionError(
            f"exact index {index} exceeds constructive class count on {encode_arcs(size, arcs)}"
        )


def _mark_bound_breakers(report: SweepReport, family, n, mode, graph) -> None:
    """Fill the counterexample list by re-walking instances past the bound."""
    if report.max_index is None or report.max_index <= report.bound:
        return
    mode_code = kernel.MODE_CODES[mode.value]
    budget = node_budget()
    for size, arcs in iter_family_arcs(family, n, graph):
        index, _nodes, hit = _exact_instance_index(size, arcs, mode_code, budget)
        if not hit and index > report.bound:
            report.counterexamples.append(
                {"digraph": encode_arcs(size, arcs), "index": index}
            )


def sweep(
    family: str,
    n: int,
    mode: Mode,
    bound: int,
    strategy: str = "exact",
    jobs: int = 1,
    graph: SimpleGraph | None = None,
    out_path: str | None = None,
    resume_from: str | None = None,
    chunk_size: int = 4096,
    budget: int | None = None,
    cross_check: str | None = None,
    stop_after_chunks: int | None = None,
) -> SweepReport:
    """Exhaustively determine exact indices over a family.

    ``cross_check`` optionally names a constructive operation that must
    produce a verified coloring with at least ``index`` nonempty classes on
    every instance.  ``stop_after_chunks`` is a testing hook that interrupts
    the sweep after merging that many chunks (the checkpoint stays valid).
    """
    if mode not in _SWEEP_MODES:
        raise ValueError(f"sweeps need a total mode, not {mode.value!r}")
    if budget is None:
        budget = node_budget()
    started = time.monotonic()
    if resume_from is not None:
        report = load_report(resume_from)
        expected = (family, n, mode.value, bound, strategy)
        if report.key() != expected:
            raise ValueError(f"resume file is for {report.key()}, expected {expected}")
        if report.complete:
            return report
    else:
        report = SweepReport(family, n, mode.value, bound, strategy)
    base_wall = report.wall_time
    merged_chunks = 0
    exhausted = False

    def merge(result: dict) -> bool:
        """Fold one chunk; True when the stream ended inside it."""
        nonlocal merged_chunks
        for idx, cnt in result["histogram"].items():
            report.histogram[idx] = report.histogram.get(idx, 0) + cnt
        report.instances += result["count"]
        report.budget_incidents.extend(result["incidents"])
        report.cursor = result["span"][0] + result["processed"]
        merged_chunks += 1
        report.wall_time = base_wall + (time.monotonic() - started)
        if out_path is not None:
            save_report(report, out_path)
        return result["processed"] < result["span"][1] - result["span"][0]

    if jobs <= 1:
        stream = iter_family_arcs(family, n, graph, report.cursor)
        while not exhausted:
            start = report.cursor
            chunk = list(itertools.islice(stream, chunk_size))
            result = _process_chunk(
                iter(chunk), (start, start + chunk_size), mode, strategy, budget, cross_check
            )
            exhausted = merge(result)
            if stop_after_chunks is not None and merged_chunks >= stop_after_chunks:
                break
    else:
        graph_edges = sorted(graph.edges) if graph is not None else None
        graph_n = graph.n if graph is not None else 0
        with multiprocessing.Pool(
            jobs,
            initializer=_init_worker,
            initargs=(family, n, mode.value, strategy, budget, graph_edges, graph_n, cross_check),
        ) as pool:
            stopped = False
            while not exhausted and not stopped:
                wave_start = report.cursor
                wave = [
                    (wave_start + i * chunk_size, wave_start + (i + 1) * chunk_size)
                    for i in range(jobs * 2)
                ]
                for result in pool.map(_run_chunk, wave):
                    exhausted = merge(result)
                    if exhausted:
                        break
                    if stop_after_chunks is not None and merged_chunks >= stop_after_chunks:
                        stopped = True
                        break

    if exhausted:
        report.complete = True
        _mark_bound_breakers(report, family, n, mode, graph)
    report.wall_time = base_wall + (time.monotonic() - started)
    if out_path is not None:
        save_report(report, out_path)
    return report


def save_report(report: SweepReport, path: str) -> None:
    """Atomic JSON persistence (write then rename)."""
    data = asdict(report)
    data["histogram"] = {str(k): v for k, v in sorted(report.histogram.items())}
    tmp = f"{path}.tmp"
    with open(tmp, "w", encoding="utf-8") as fh:
        json.dump(data, fh, indent=1, sort_keys=True)
        fh.write("\n")
    os.replace(tmp, path)


def load_report(path: str) -> SweepReport:
    with open(path, encoding="utf-8") as fh:
        try:
            data = json.load(fh)
        except json.JSONDecodeError as exc:
            raise ValueError(f"malformed report file {path}: {exc}") from exc
    if data.get("schema") != SCHEMA:
        raise ValueError(
            f"report schema {data.get('schema')!r} does not match {SCHEMA!r}"
        )
    data["histogram"] = {int(k): v for k, v in data["histogram"].items()}
    return SweepReport(**data)


def reports_equal(a: SweepReport, b: SweepReport) -> bool:
    """Equality on the deterministic content (wall time excluded)."""
    return a.deterministic_fields() == b.deterministic_fields()
