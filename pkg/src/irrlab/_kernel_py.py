"""Pure-Python backtracking kernel for arc-coloring feasibility.

The compiled extension (``irrlab._speedups``) implements the same function
with identical semantics, node accounting included; this module is the
fallback selected at import time by :mod:`irrlab.kernel`.

Search contract: arcs are colored in the given order; a violation between two
vertices is only asserted once every arc incident to both is colored (sound
pruning, no feasible completion is ever cut).  With ``symmetry_break`` the
color of each arc may exceed the maximum color used before it by at most one,
which is sound only when no arc color is fixed.
"""

from __future__ import annotations

from typing import Sequence

MODE_WEAK = 0
MODE_STRONG = 1
MODE_PP = 2
MODE_PM = 3
MODE_MP = 4
MODE_MM = 5
MODE_GRAPH = 6

FOUND = 1
EXHAUSTED = 0
BUDGET_HIT = -1


def _conflict(mode: int, out, inn, n: int, k: int, p: int, q: int) -> bool:
    base = k * n
    if mode == MODE_WEAK:
        return out[base + p] == out[base + q] and inn[base + p] == inn[base + q]
    if mode == MODE_STRONG:
        return out[base + p] - inn[base + p] == out[base + q] - inn[base + q]
    if mode == MODE_PP or mode == MODE_GRAPH:
        return out[base + p] == out[base + q]
    if mode == MODE_PM:
        return out[base + p] == inn[base + q]
    if mode == MODE_MP:
        return inn[base + p] == out[base + q]
    return inn[base + p] == inn[base + q]


def search_coloring(
    n: int,
    arcs: Sequence[tuple[int, int]],
    mode: int,
    num_colors: int,
    fixed: Sequence[int] | None = None,
    symmetry_break: bool = False,
    budget: int = 10**8,
) -> tuple[int, tuple[int, ...] | None, int]:
    """Find one feasible coloring of ``arcs`` with ``num_colors`` colors.

    Returns ``(status, colors, nodes)`` where status is FOUND / EXHAUSTED /
    BUDGET_HIT, colors aligns with ``arcs`` when found, and nodes counts the
    assignment attempts of the search phase (fixed arcs are not counted).
    """
    m = len(arcs)
    if fixed is None:
        fixed = [0] * m
    if symmetry_break and any(fixed):
        raise ValueError("symmetry breaking is unsound with fixed arc colors")

    tails = [a[0] for a in arcs]
    heads = [a[1] for a in arcs]
    inc: list[list[int]] = [[] for _ in range(n)]
    for i in range(m):
        inc[tails[i]].append(i)
        inc[heads[i]].append(i)

    size = (num_colors + 1) * n
    out = [0] * size
    inn = [0] * size
    rem = [len(inc[v]) for v in range(n)]
    colors = [0] * m
    graph_mode = mode == MODE_GRAPH

    def apply(i: int, k: int) -> bool:
        """Assign color k to arc i; True iff no finalized pair now conflicts."""
        u = tails[i]
        v = heads[i]
        base = k * n
        if graph_mode:
            out[base + u] += 1
            out[base + v] += 1
        else:
            out[base + u] += 1
            inn[base + v] += 1
        rem[u] -= 1
        rem[v] -= 1
        colors[i] = k
        for w in (u, v):
            if rem[w] == 0:
                for j in inc[w]:
                    p = tails[j]
                    q = heads[j]
                    z = q if p == w else p
                    if rem[z] == 0 and _conflict(mode, out, inn, n, colors[j], p, q):
                        return False
        return True

    def undo(i: int) -> None:
        u = tails[i]
        v = heads[i]
        base = colors[i] * n
        if graph_mode:
            out[base + u] -= 1
            out[base + v] -= 1
        else:
            out[base + u] -= 1
            inn[base + v] -= 1
        rem[u] += 1
        rem[v] += 1
        colors[i] = 0

    # Pre-assign fixed arcs; a conflict among them means no completion exists.
    for i in range(m):
        if fixed[i]:
            if not apply(i, fixed[i]):
                return EXHAUSTED, None, 0

    free = [i for i in range(m) if not fixed[i]]
    nodes = 0
    if not free:
        return FOUND, tuple(colors), nodes

    depth = 0
    trial = [0] * len(free)  # last color tried at each depth
    max_used = [0] * (len(free) + 1)
    if symmetry_break:
        max_used[0] = 0
    else:
        max_used[0] = num_colors  # no cap

    while True:
        i = free[depth]
        limit = num_colors if not symmetry_break else min(num_colors, max_used[depth] + 1)
        k = trial[depth] + 1
        if k > limit:
            # Exhausted this depth; backtrack.
            trial[depth] = 0
            depth -= 1
            if depth < 0:
                return EXHAUSTED, None, nodes
            undo(free[depth])
            continue
        trial[depth] = k
        nodes += 1
        if nodes > budget:
            return BUDGET_HIT, None, nodes
        if apply(i, k):
            max_used[depth + 1] = max_used[depth] if not symmetry_break else max(max_used[depth], k)
            depth += 1
            if depth == len(free):
                return FOUND, tuple(colors), nodes
        else:
            undo(i)
