"""Brute-force oracle for irregular chromatic indices.

``exact_index`` runs a backtracking search over arc colorings in lexicographic
arc order with symmetry breaking (a new color first appears on the earliest
possible arc) and sound pruning: a violation between two vertices is asserted
only once all their incident arcs are colored.  ``exact_index_naive`` is the
independent cross-check that enumerates every assignment without pruning.
"""

from __future__ import annotations

import itertools
import os
from dataclasses import dataclass

from . import kernel
from .digraph import Arc, Digraph, SimpleGraph
from .irregularity import ArcColoring, Mode, verify_coloring

DEFAULT_BUDGET = 10**8


def node_budget() -> int:
    """Solver node budget; the IRRLAB_BUDGET environment variable overrides."""
    raw = os.environ.get("IRRLAB_BUDGET")
    if raw is None:
        return DEFAULT_BUDGET
    try:
        value = int(raw)
    except ValueError as exc:
        raise ValueError(f"IRRLAB_BUDGET must be an integer, got {raw!r}") from exc
    if value <= 0:
        raise ValueError("IRRLAB_BUDGET must be positive")
    return value


@dataclass(frozen=True)
class SolveResult:
    """Outcome of an exact-index computation.

    ``index`` is None when no feasible count was found up to the cap;
    ``certified_infeasible`` additionally means the cap reached the arc count,
    past which no coloring can exist at all (dropping empty classes shows any
    feasible coloring needs at most one color per arc).  ``budget_hit`` marks
    an inconclusive search.
    """

    index: int | None
    witness: ArcColoring | None
    nodes_explored: int
    budget_hit: bool
    searched_up_to: int
    certified_infeasible: bool = False

    @property
    def infeasible(self) -> bool:
        return self.certified_infeasible


def _mode_arcs(target: Digraph | SimpleGraph, mode: Mode) -> tuple[Arc, ...]:
    if mode is Mode.GRAPH:
        if not isinstance(target, SimpleGraph):
            raise ValueError("mode 'graph' needs a SimpleGraph")
        return target.edge_seq()
    if not isinstance(target, Digraph):
        raise ValueError(f"mode '{mode.value}' needs a Digraph")
    return target.arc_seq()


def exact_index(
    target: Digraph | SimpleGraph,
    mode: Mode,
    max_colors: int | None = None,
    budget: int | None = None,
) -> SolveResult:
    """Smallest number of colors in a feasible coloring, with a witness.

    Counts are tried upward from 1, so ``index - 1`` is certified infeasible
    whenever the budget was not hit.  In weak, strong, pp and mm modes a
    coloring always exists (every arc its own color); in graph mode and in
    the mixed pm/mp modes no coloring may exist at all (e.g. odd paths for
    graphs, any lone source-to-sink arc for pm), in which case the scan up to
    the arc count certifies infeasibility.  An arcless target has index 0 by
    convention.
    """
    arcs = _mode_arcs(target, mode)
    m = len(arcs)
    if m == 0:
        return SolveResult(0, ArcColoring({}, 0), 0, False, 0)
    if max_colors is None:
        max_colors = m
    if max_colors < 1:
        raise ValueError("max_colors must be at least 1")
    if budget is None:
        budget = node_budget()

    mode_code = kernel.MODE_CODES[mode.value]
    cap = min(max_colors, m)
    total_nodes = 0
    for c in range(1, cap + 1):
        status, colors, nodes = kernel.search_coloring(
            target.n, arcs, mode_code, c, None, True, budget - total_nodes
        )
        total_nodes += nodes
        if status == kernel.FOUND:
            witness = ArcColoring(dict(zip(arcs, colors)), c)
            cert = verify_coloring(target, witness, mode)
            if not cert.verdict:
                raise AssertionError(f"solver produced a non-verifying witness: {cert}")
            return SolveResult(c, witness, total_nodes, False, c)
        if status == kernel.BUDGET_HIT:
            return SolveResult(None, None, total_nodes, True, c - 1)
    return SolveResult(None, None, total_nodes, False, cap, certified_infeasible=cap == m)


def extend_partial(
    d: Digraph | SimpleGraph,
    fixed: dict[Arc, int],
    free_arcs: list[Arc],
    mode: Mode,
    num_colors: int,
    budget: int | None = None,
) -> ArcColoring | None:
    """Exhaust all assignments of ``free_arcs`` given the fixed colors.

    Returns a verified witness or None when no assignment works.  ``fixed``
    and ``free_arcs`` must be disjoint and together cover the arc set.
    """
    arcs = _mode_arcs(d, mode)
    fixed_set = set(fixed)
    free_set = set(free_arcs)
    if fixed_set & free_set:
        raise ValueError("fixed and free arcs overlap")
    if fixed_set | free_set != set(arcs):
        raise ValueError("fixed and free arcs together must cover the arc set")
    if budget is None:
        budget = node_budget()

    # Branch on the free arcs in the caller's order, after the fixed ones.
    ordered = sorted(fixed_set) + list(free_arcs)
    fixed_vec = [fixed.get(a, 0) for a in ordered]
    status, colors, _nodes = kernel.search_coloring(
        d.n, ordered, kernel.MODE_CODES[mode.value], num_colors, fixed_vec, False, budget
    )
    if status != kernel.FOUND:
        return None
    witness = ArcColoring(dict(zip(ordered, colors)), num_colors)
    cert = verify_coloring(d, witness, mode)
    if not cert.verdict:
        raise AssertionError(f"extend_partial produced a non-verifying witness: {cert}")
    return witness


def feasible(target: Digraph | SimpleGraph, mode: Mode, num_colors: int, budget: int | None = None) -> bool:
    """True iff a coloring with exactly ``num_colors`` colors exists."""
    res = exact_index(target, mode, max_colors=num_colors, budget=budget)
    if res.budget_hit:
        raise RuntimeError("feasibility undecided: node budget exhausted")
    return res.index is not None and res.index <= num_colors


def exact_index_naive(
    target: Digraph | SimpleGraph, mode: Mode, max_colors: int
) -> int | None:
    """Unpruned oracle: tries every assignment of every color count.

    Independent of the kernel path; feasibility of each assignment is decided
    by the verifier alone.  Only usable at tiny sizes.
    """
    arcs = _mode_arcs(target, mode)
    if not arcs:
        return 0
    for c in range(1, max_colors + 1):
        for assignment in itertools.product(range(1, c + 1), repeat=len(arcs)):
            coloring = ArcColoring(dict(zip(arcs, assignment)), c)
            if verify_coloring(target, coloring, mode).verdict:
                return c
    return None
