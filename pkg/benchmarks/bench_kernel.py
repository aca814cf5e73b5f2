"""Benchmark the pure-Python and compiled search kernels on the same work.

Usage:
    python3 benchmarks/bench_kernel.py [--seconds 2.0]

Workloads: exact weak/strong indices over all digraphs on four vertices, a
batch of dense five-vertex instances, and the four-color cactus in graph
mode.  Results must be identical across backends; the benchmark asserts so.
"""

from __future__ import annotations

import argparse
import time

from irrlab import kernel
from irrlab.digraph import SimpleGraph, iter_family_arcs
from irrlab.irregularity import Mode
from irrlab.solver import exact_index
from irrlab.sweeps import _solve_instance

FOUR_COLOR_CACTUS = SimpleGraph(
    10,
    [
        (0, 1), (0, 2), (1, 2),
        (0, 4), (0, 5), (4, 5),
        (0, 3),
        (3, 6), (3, 7), (6, 7),
        (3, 8), (3, 9), (8, 9),
    ],
)


def workload() -> list[int | None]:
    results: list[int | None] = []
    for mode in (Mode.WEAK, Mode.STRONG):
        for size, arcs in iter_family_arcs("all_digraphs", 4):
            index, _, _ = _solve_instance(size, arcs, mode, "exact", 10**8)
            results.append(index)
    dense = [
        arcs
        for _, arcs in iter_family_arcs("all_digraphs", 5, start=4**10 - 2000)
    ]
    for arcs in dense:
        index, _, _ = _solve_instance(5, arcs, Mode.WEAK, "exact", 10**8)
        results.append(index)
    results.append(exact_index(FOUR_COLOR_CACTUS, Mode.GRAPH).index)
    return results


def timed(backend: str, min_seconds: float) -> tuple[float, int, list]:
    kernel.force_backend(backend)
    rounds = 0
    out: list = []
    started = time.perf_counter()
    while True:
        out = workload()
        rounds += 1
        elapsed = time.perf_counter() - started
        if elapsed >= min_seconds:
            return elapsed / rounds, rounds, out


def kernel_only(backend: str, min_seconds: float) -> float:
    """Single deep search, no per-instance Python overhead."""
    kernel.force_backend(backend)
    n = 8
    arcs = sorted((u, v) for u in range(n) for v in range(n) if u != v)
    mode = kernel.MODE_CODES["weak"]
    rounds = 0
    started = time.perf_counter()
    while True:
        status, _colors, nodes = kernel.search_coloring(n, arcs, mode, 2, None, True, 10**8)
        assert status == kernel.FOUND and nodes > 100_000
        rounds += 1
        elapsed = time.perf_counter() - started
        if elapsed >= min_seconds:
            return elapsed / rounds


def main() -> None:
    parser = argparse.ArgumentParser()
    parser.add_argument("--seconds", type=float, default=2.0, help="minimum time per backend")
    args = parser.parse_args()

    available = kernel.available_backends()
    print(f"available backends: {', '.join(available)}")
    baseline: list | None = None
    times: dict[str, float] = {}
    deep: dict[str, float] = {}
    for backend in available:
        per_round, rounds, results = timed(backend, args.seconds)
        times[backend] = per_round
        print(f"{backend:>7}: {per_round:8.3f}s per sweep round  ({rounds} rounds)")
        deep[backend] = kernel_only(backend, args.seconds / 2)
        print(f"{backend:>7}: {deep[backend] * 1e3:8.2f}ms per deep search")
        if baseline is None:
            baseline = results
        elif results != baseline:
            raise SystemExit("backends disagree on the workload results")
    if "cython" in times and "python" in times:
        print(f"sweep speedup:       {times['python'] / times['cython']:5.1f}x")
        print(f"deep-search speedup: {deep['python'] / deep['cython']:5.1f}x")
    kernel.force_backend(available[-1])


if __name__ == "__main__":
    main()
