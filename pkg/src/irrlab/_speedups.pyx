# cython: language_level=3
"""Compiled backtracking kernel; semantics identical to irrlab._kernel_py.

Fixed-size buffers: n <= 64 vertices, 192 arcs, 15 colors.  The dispatcher in
irrlab.kernel falls back to the pure-Python kernel beyond these limits.
"""

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

DEF MAX_N = 64
DEF MAX_M = 192
DEF MAX_C = 16  # colors 1..15, slot 0 unused


cdef inline bint _conflict(int mode, int *out, int *inn, int n, int k, int p, int q) nogil:
    # Mode codes: 0 weak, 1 strong, 2 pp, 3 pm, 4 mp, 5 mm, 6 graph.
    cdef int base = k * n
    if mode == 0:
        return out[base + p] == out[base + q] and inn[base + p] == inn[base + q]
    if mode == 1:
        return out[base + p] - inn[base + p] == out[base + q] - inn[base + q]
    if mode == 2 or mode == 6:
        return out[base + p] == out[base + q]
    if mode == 3:
        return out[base + p] == inn[base + q]
    if mode == 4:
        return inn[base + p] == out[base + q]
    return inn[base + p] == inn[base + q]


def search_coloring(int n, arcs, int mode, int num_colors, fixed=None,
                    bint symmetry_break=False, long long budget=10**8):
    """Find one feasible coloring; returns (status, colors-or-None, nodes)."""
    cdef int m = len(arcs)
    cdef int tails[MAX_M]
    cdef int heads[MAX_M]
    cdef int fixed_c[MAX_M]
    cdef int colors[MAX_M]
    cdef int inc_start[MAX_N + 1]
    cdef int inc_flat[2 * MAX_M]
    cdef int inc_fill[MAX_N]
    cdef int out[MAX_C * MAX_N]
    cdef int inn[MAX_C * MAX_N]
    cdef int rem[MAX_N]
    cdef int free_idx[MAX_M]
    cdef int trial[MAX_M]
    cdef int max_used[MAX_M + 1]
    cdef int i, u, v, k, w, j, p, q, z, base, depth, limit, n_free, side
    cdef long long nodes = 0
    cdef bint graph_mode = (mode == 6)
    cdef bint any_fixed = False
    cdef bint ok

    if n > MAX_N or m > MAX_M or num_colors >= MAX_C:
        raise ValueError("instance exceeds compiled kernel limits")

    for i in range(m):
        tails[i] = arcs[i][0]
        heads[i] = arcs[i][1]
        colors[i] = 0
    if fixed is None:
        for i in range(m):
            fixed_c[i] = 0
    else:
        for i in range(m):
            fixed_c[i] = fixed[i]
            if fixed_c[i]:
                any_fixed = True
    if symmetry_break and any_fixed:
        raise ValueError("symmetry breaking is unsound with fixed arc colors")

    # CSR-style incidence lists.
    for v in range(n):
        rem[v] = 0
    for i in range(m):
        rem[tails[i]] += 1
        rem[heads[i]] += 1
    inc_start[0] = 0
    for v in range(n):
        inc_start[v + 1] = inc_start[v] + rem[v]
        inc_fill[v] = inc_start[v]
    for i in range(m):
        inc_flat[inc_fill[tails[i]]] = i
        inc_fill[tails[i]] += 1
        inc_flat[inc_fill[heads[i]]] = i
        inc_fill[heads[i]] += 1

    for i in range((num_colors + 1) * n):
        out[i] = 0
        inn[i] = 0

    # Pre-assign fixed arcs with the same finalization checks as the search.
    for i in range(m):
        if fixed_c[i]:
            k = fixed_c[i]
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
            for side in range(2):
                w = u if side == 0 else v
                if rem[w] == 0:
                    for j in range(inc_start[w], inc_start[w + 1]):
                        p = tails[inc_flat[j]]
                        q = heads[inc_flat[j]]
                        z = q if p == w else p
                        if rem[z] == 0 and _conflict(mode, out, inn, n, colors[inc_flat[j]], p, q):
                            return EXHAUSTED, None, 0

    n_free = 0
    for i in range(m):
        if not fixed_c[i]:
            free_idx[n_free] = i
            n_free += 1
    if n_free == 0:
        return FOUND, tuple(colors[i] for i in range(m)), 0

    for i in range(n_free):
        trial[i] = 0
    max_used[0] = 0 if symmetry_break else num_colors

    depth = 0
    while True:
        i = free_idx[depth]
        limit = num_colors
        if symmetry_break and max_used[depth] + 1 < limit:
            limit = max_used[depth] + 1
        k = trial[depth] + 1
        if k > limit:
            trial[depth] = 0
            depth -= 1
            if depth < 0:
                return EXHAUSTED, None, nodes
            # Undo the parent's assignment and advance its color.
            i = free_idx[depth]
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
            continue
        trial[depth] = k
        nodes += 1
        if nodes > budget:
            return BUDGET_HIT, None, nodes

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
        ok = True
        for side in range(2):
            w = u if side == 0 else v
            if ok and rem[w] == 0:
                for j in range(inc_start[w], inc_start[w + 1]):
                    p = tails[inc_flat[j]]
                    q = heads[inc_flat[j]]
                    z = q if p == w else p
                    if rem[z] == 0 and _conflict(mode, out, inn, n, colors[inc_flat[j]], p, q):
                        ok = False
                        break
        if ok:
            if symmetry_break:
                max_used[depth + 1] = max_used[depth] if max_used[depth] >= k else k
            else:
                max_used[depth + 1] = max_used[depth]
            depth += 1
            if depth == n_free:
                return FOUND, tuple(colors[i] for i in range(m)), nodes
        else:
            if graph_mode:
                out[base + u] -= 1
                out[base + v] -= 1
            else:
                out[base + u] -= 1
                inn[base + v] -= 1
            rem[u] += 1
            rem[v] += 1
            colors[i] = 0
