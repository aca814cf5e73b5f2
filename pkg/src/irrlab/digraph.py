"""Digraph and skeleton primitives.

Digraphs here are loop-free, have at most one arc per ordered vertex pair,
and may carry both ``(u, v)`` and ``(v, u)``.  Oriented graphs (orientations
of simple graphs) are the special case without such two-way pairs.  The module
also houses structural classification (symmetric / tournament / Eulerian /
cactus skeleton, ...), pendant decomposition of cacti, proper vertex coloring
of skeletons, and exhaustive enumeration of the digraph families used by the
conjecture sweeps.

Both :class:`Digraph` and :class:`SimpleGraph` are immutable after
construction and safe to share across worker processes.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

Arc = tuple[int, int]
Edge = tuple[int, int]


class Digraph:
    """Immutable digraph on vertices ``0 .. n-1``.

    Arcs are ordered pairs ``(u, v)`` with ``u != v``; a pair may appear at
    most once, but opposite arcs ``(u, v)`` and ``(v, u)`` may coexist.
    Adjacency tuples are precomputed so membership tests are O(1) and
    neighborhood iteration is O(deg).
    """

    __slots__ = ("n", "arcs", "_out", "_in")

    def __init__(self, n: int, arc_list: Iterable[Arc]):
        arcs = list(arc_list)
        if n < 0:
            raise ValueError("vertex count must be nonnegative")
        seen: set[Arc] = set()
        for u, v in arcs:
            if u == v:
                raise ValueError(f"loop at vertex {u} is not allowed")
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"arc ({u}, {v}) has an endpoint out of range 0..{n - 1}")
            if (u, v) in seen:
                raise ValueError(f"duplicate arc ({u}, {v})")
            seen.add((u, v))
        self.n = n
        self.arcs = frozenset(seen)
        self._build_adjacency()

    @classmethod
    def _from_trusted(cls, n: int, arcs: frozenset[Arc]) -> "Digraph":
        # Fast path for enumerators that generate arcs known to be valid.
        self = object.__new__(cls)
        self.n = n
        self.arcs = arcs
        self._build_adjacency()
        return self

    def _build_adjacency(self) -> None:
        out: list[list[int]] = [[] for _ in range(self.n)]
        inn: list[list[int]] = [[] for _ in range(self.n)]
        for u, v in sorted(self.arcs):
            out[u].append(v)
            inn[v].append(u)
        self._out = tuple(tuple(x) for x in out)
        self._in = tuple(tuple(x) for x in inn)

    @property
    def m(self) -> int:
        return len(self.arcs)

    def arc_seq(self) -> tuple[Arc, ...]:
        """Arcs in lexicographic order (the canonical branching order)."""
        return tuple(sorted(self.arcs))

    def out_neighbors(self, v: int) -> tuple[int, ...]:
        return self._out[v]

    def in_neighbors(self, v: int) -> tuple[int, ...]:
        return self._in[v]

    def out_degree(self, v: int) -> int:
        return len(self._out[v])

    def in_degree(self, v: int) -> int:
        return len(self._in[v])

    def has_arc(self, u: int, v: int) -> bool:
        return (u, v) in self.arcs

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, Digraph) and self.n == other.n and self.arcs == other.arcs
        )

    def __hash__(self) -> int:
        return hash((self.n, self.arcs))

    def __repr__(self) -> str:
        return f"Digraph(n={self.n}, arcs={sorted(self.arcs)})"


class SimpleGraph:
    """Immutable simple graph on vertices ``0 .. n-1`` (no loops, no multi-edges)."""

    __slots__ = ("n", "edges", "_adj")

    def __init__(self, n: int, edge_list: Iterable[Edge]):
        if n < 0:
            raise ValueError("vertex count must be nonnegative")
        edges: set[Edge] = set()
        for u, v in edge_list:
            if u == v:
                raise ValueError(f"loop at vertex {u} is not allowed")
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u}, {v}) has an endpoint out of range 0..{n - 1}")
            e = (u, v) if u < v else (v, u)
            if e in edges:
                raise ValueError(f"duplicate edge {e}")
            edges.add(e)
        self.n = n
        self.edges = frozenset(edges)
        adj: list[list[int]] = [[] for _ in range(n)]
        for u, v in sorted(edges):
            adj[u].append(v)
            adj[v].append(u)
        self._adj = tuple(tuple(sorted(x)) for x in adj)

    def neighbors(self, v: int) -> tuple[int, ...]:
        return self._adj[v]

    def degree(self, v: int) -> int:
        return len(self._adj[v])

    @property
    def m(self) -> int:
        return len(self.edges)

    def edge_seq(self) -> tuple[Edge, ...]:
        return tuple(sorted(self.edges))

    def has_edge(self, u: int, v: int) -> bool:
        e = (u, v) if u < v else (v, u)
        return e in self.edges

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, SimpleGraph)
            and self.n == other.n
            and self.edges == other.edges
        )

    def __hash__(self) -> int:
        return hash((self.n, self.edges))

    def __repr__(self) -> str:
        return f"SimpleGraph(n={self.n}, edges={sorted(self.edges)})"


@dataclass(frozen=True)
class DegreeProfile:
    """Outdegree/indegree of one vertex, with the derived quantities."""

    out_deg: int
    in_deg: int

    @property
    def pair(self) -> tuple[int, int]:
        return (self.out_deg, self.in_deg)

    @property
    def balanced(self) -> int:
        return self.out_deg - self.in_deg


@dataclass(frozen=True)
class StructureFlags:
    is_symmetric: bool
    is_tournament: bool
    is_eulerian: bool
    is_acyclic: bool
    is_orientation: bool
    is_orientation_of_regular: bool
    skeleton_bipartite: bool
    skeleton_unicyclic: bool
    skeleton_cactus: bool
    skeleton_tree: bool


@dataclass(frozen=True)
class PendantStructure:
    """Pendant decomposition of a cactus skeleton.

    ``pendant_trees`` holds ``(attachment vertex, tree vertex set)`` pairs,
    ``pendant_cycles`` the vertex sequences of cycles whose edge removal
    leaves at most one cyclic component, and ``bridge_forest`` all bridges.
    ``all_cycles`` lists every cycle block; together with the bridges they
    partition the edge set.
    """

    pendant_trees: tuple[tuple[int, frozenset[int]], ...]
    pendant_cycles: tuple[tuple[int, ...], ...]
    bridge_forest: frozenset[Edge]
    all_cycles: tuple[tuple[int, ...], ...] = ()


@dataclass(frozen=True)
class PartitionedSkeleton:
    """A proper vertex partition of a skeleton into independent sets."""

    graph: SimpleGraph
    parts: tuple[frozenset[int], ...]
    chromatic_exact: bool

    def part_of(self) -> dict[int, int]:
        """Vertex -> index of its part."""
        owner: dict[int, int] = {}
        for i, part in enumerate(self.parts):
            for v in part:
                owner[v] = i
        return owner


def build_digraph(n: int, arc_list: Sequence[Arc]) -> Digraph:
    """Validate and build a digraph; rejects loops, duplicates, bad endpoints."""
    return Digraph(n, arc_list)


def degree_profile(d: Digraph, v: int) -> DegreeProfile:
    if not (0 <= v < d.n):
        raise ValueError(f"vertex {v} out of range 0..{d.n - 1}")
    return DegreeProfile(d.out_degree(v), d.in_degree(v))


def skeleton(d: Digraph) -> SimpleGraph:
    """Forget orientations; opposite arc pairs collapse to a single edge."""
    return SimpleGraph(d.n, {(min(u, v), max(u, v)) for u, v in d.arcs})


def reverse(d: Digraph) -> Digraph:
    """Flip every arc.  An involution."""
    return Digraph._from_trusted(d.n, frozenset((v, u) for u, v in d.arcs))


def is_weakly_connected(d: Digraph) -> bool:
    if d.n <= 1:
        return True
    seen = {0}
    stack = [0]
    while stack:
        v = stack.pop()
        for w in itertools.chain(d.out_neighbors(v), d.in_neighbors(v)):
            if w not in seen:
                seen.add(w)
                stack.append(w)
    return len(seen) == d.n


def is_acyclic(d: Digraph) -> bool:
    """True iff a topological order exists (two-way pairs are 2-cycles)."""
    indeg = [d.in_degree(v) for v in range(d.n)]
    queue = [v for v in range(d.n) if indeg[v] == 0]
    removed = 0
    while queue:
        v = queue.pop()
        removed += 1
        for w in d.out_neighbors(v):
            indeg[w] -= 1
            if indeg[w] == 0:
                queue.append(w)
    return removed == d.n


def _graph_connected(g: SimpleGraph) -> bool:
    if g.n <= 1:
        return True
    seen = {0}
    stack = [0]
    while stack:
        v = stack.pop()
        for w in g.neighbors(v):
            if w not in seen:
                seen.add(w)
                stack.append(w)
    return len(seen) == g.n


def _graph_components(g: SimpleGraph, vertices: Iterable[int] | None = None) -> list[set[int]]:
    todo = set(range(g.n)) if vertices is None else set(vertices)
    comps = []
    while todo:
        start = min(todo)
        comp = {start}
        stack = [start]
        todo.discard(start)
        while stack:
            v = stack.pop()
            for w in g.neighbors(v):
                if w in todo:
                    todo.discard(w)
                    comp.add(w)
                    stack.append(w)
        comps.append(comp)
    return comps


def _biconnected_blocks(g: SimpleGraph) -> list[list[Edge]]:
    """Edge sets of the biconnected blocks (iterative Hopcroft-Tarjan)."""
    disc = [-1] * g.n
    low = [0] * g.n
    blocks: list[list[Edge]] = []
    edge_stack: list[Edge] = []
    timer = 0
    for root in range(g.n):
        if disc[root] != -1:
            continue
        stack: list[tuple[int, int, Iterator[int]]] = [(root, -1, iter(g.neighbors(root)))]
        disc[root] = low[root] = timer
        timer += 1
        while stack:
            v, parent, it = stack[-1]
            advanced = False
            for w in it:
                if w == parent:
                    # Skip one occurrence of the tree edge back to the parent.
                    parent = -2
                    stack[-1] = (v, -2, it)
                    continue
                if disc[w] == -1:
                    edge_stack.append((min(v, w), max(v, w)))
                    disc[w] = low[w] = timer
                    timer += 1
                    stack.append((w, v, iter(g.neighbors(w))))
                    advanced = True
                    break
                elif disc[w] < disc[v]:
                    edge_stack.append((min(v, w), max(v, w)))
                    low[v] = min(low[v], disc[w])
            if advanced:
                continue
            stack.pop()
            if stack:
                pv = stack[-1][0]
                low[pv] = min(low[pv], low[v])
                if low[v] >= disc[pv]:
                    block: list[Edge] = []
                    target = (min(pv, v), max(pv, v))
                    while edge_stack:
                        e = edge_stack.pop()
                        block.append(e)
                        if e == target:
                            break
                    if block:
                        blocks.append(block)
    return blocks


def _cycle_blocks(g: SimpleGraph) -> tuple[bool, list[list[Edge]], list[Edge]]:
    """Split blocks into cycles and bridges.

    Returns ``(every block is an edge or a cycle, cycle blocks, bridges)``.
    """
    cycles: list[list[Edge]] = []
    bridges: list[Edge] = []
    ok = True
    for block in _biconnected_blocks(g):
        if len(block) == 1:
            bridges.append(block[0])
            continue
        verts = {v for e in block for v in e}
        if len(block) != len(verts):
            ok = False
            continue
        deg: dict[int, int] = {}
        for u, v in block:
            deg[u] = deg.get(u, 0) + 1
            deg[v] = deg.get(v, 0) + 1
        if any(x != 2 for x in deg.values()):
            ok = False
        else:
            cycles.append(block)
    return ok, cycles, bridges


def is_cactus(g: SimpleGraph) -> bool:
    """Connected and every block is a single edge or a cycle."""
    if not _graph_connected(g):
        return False
    ok, _, _ = _cycle_blocks(g)
    return ok


def _cycle_vertex_sequence(block: list[Edge]) -> tuple[int, ...]:
    adj: dict[int, list[int]] = {}
    for u, v in block:
        adj.setdefault(u, []).append(v)
        adj.setdefault(v, []).append(u)
    start = min(adj)
    seq = [start]
    prev = -1
    cur = start
    while True:
        # Mid-walk only one neighbor differs from prev; at the start pick the smaller.
        nxt = next(w for w in sorted(adj[cur]) if w != prev)
        if nxt == start:
            break
        seq.append(nxt)
        prev, cur = cur, nxt
    return tuple(seq)


def classify(d: Digraph) -> StructureFlags:
    """Compute every structural flag from its definition."""
    g = skeleton(d)
    two_way = any((v, u) in d.arcs for u, v in d.arcs)
    is_orientation = not two_way
    complete = g.m == d.n * (d.n - 1) // 2
    symmetric = all((v, u) in d.arcs for u, v in d.arcs)
    balanced_zero = all(d.out_degree(v) == d.in_degree(v) for v in range(d.n))
    eulerian = balanced_zero and is_weakly_connected(d)
    degs = {g.degree(v) for v in range(g.n)}
    regular = len(degs) <= 1
    connected = _graph_connected(g)
    cactus_ok, cycles, _ = _cycle_blocks(g)
    return StructureFlags(
        is_symmetric=symmetric,
        is_tournament=is_orientation and complete,
        is_eulerian=eulerian,
        is_acyclic=is_acyclic(d),
        is_orientation=is_orientation,
        is_orientation_of_regular=is_orientation and regular,
        skeleton_bipartite=_bipartition(g) is not None,
        skeleton_unicyclic=connected and g.m == g.n and len(cycles) == 1 and cactus_ok,
        skeleton_cactus=connected and cactus_ok,
        skeleton_tree=connected and g.m == g.n - 1,
    )


def _bipartition(g: SimpleGraph) -> tuple[set[int], set[int]] | None:
    color = [-1] * g.n
    for root in range(g.n):
        if color[root] != -1:
            continue
        color[root] = 0
        stack = [root]
        while stack:
            v = stack.pop()
            for w in g.neighbors(v):
                if color[w] == -1:
                    color[w] = 1 - color[v]
                    stack.append(w)
                elif color[w] == color[v]:
                    return None
    return (
        {v for v in range(g.n) if color[v] == 0},
        {v for v in range(g.n) if color[v] == 1},
    )


def pendant_structure(g: SimpleGraph) -> PendantStructure:
    """Pendant trees, pendant cycles and bridges of a cactus.

    A cycle is pendant when removing its edges leaves at most one component
    that still contains a cycle; a pendant tree is a bridge-forest component
    with at least two vertices exactly one of which lies on a cycle.
    """
    if not _graph_connected(g):
        raise ValueError("input is not a cactus: not connected")
    ok, cycle_blocks, bridges = _cycle_blocks(g)
    if not ok:
        raise ValueError("input is not a cactus: some block is neither an edge nor a cycle")

    cycle_vertices = {v for block in cycle_blocks for e in block for v in e}
    cycle_edge_sets = [frozenset(block) for block in cycle_blocks]

    # Pendant trees: components of the bridge forest.
    bridge_graph = SimpleGraph(g.n, bridges)
    trees: list[tuple[int, frozenset[int]]] = []
    touched = {v for e in bridges for v in e}
    for comp in _graph_components(bridge_graph, touched):
        on_cycle = sorted(comp & cycle_vertices)
        if len(comp) >= 2 and len(on_cycle) == 1:
            trees.append((on_cycle[0], frozenset(comp)))

    # Pendant cycles: drop the cycle's edges and count cyclic components.
    pendant_cycles: list[tuple[int, ...]] = []
    for i, block in enumerate(cycle_blocks):
        removed = set(block)
        rest = SimpleGraph(g.n, [e for e in g.edges if e not in removed])
        comps = _graph_components(rest)
        cyclic = 0
        for comp in comps:
            if any(
                j != i and any(u in comp for u, _ in cycle_edge_sets[j])
                for j in range(len(cycle_edge_sets))
            ):
                cyclic += 1
        if cyclic <= 1:
            pendant_cycles.append(_cycle_vertex_sequence(block))

    if cycle_blocks and not pendant_cycles:
        raise AssertionError("a cactus with a cycle must contain a pendant cycle")
    return PendantStructure(
        pendant_trees=tuple(sorted(trees)),
        pendant_cycles=tuple(sorted(pendant_cycles)),
        bridge_forest=frozenset(bridges),
        all_cycles=tuple(sorted(_cycle_vertex_sequence(b) for b in cycle_blocks)),
    )


def _greedy_coloring(g: SimpleGraph) -> list[int]:
    """Greedy proper coloring along a degeneracy order."""
    degs = [g.degree(v) for v in range(g.n)]
    alive = set(range(g.n))
    order: list[int] = []
    while alive:
        v = min(alive, key=lambda x: (degs[x], x))
        order.append(v)
        alive.discard(v)
        for w in g.neighbors(v):
            if w in alive:
                degs[w] -= 1
    color = [-1] * g.n
    for v in reversed(order):
        used = {color[w] for w in g.neighbors(v) if color[w] != -1}
        c = 0
        while c in used:
            c += 1
        color[v] = c
    return color


def _greedy_clique(g: SimpleGraph) -> int:
    """Greedy clique lower bound for the chromatic number."""
    best = 1 if g.n else 0
    order = sorted(range(g.n), key=lambda v: (-g.degree(v), v))
    for v in order:
        clique = [v]
        for w in order:
            if w != v and all(g.has_edge(w, u) for u in clique):
                clique.append(w)
        best = max(best, len(clique))
    return best


def proper_color_skeleton(
    g: SimpleGraph, exact: bool, budget: int = 2_000_000
) -> PartitionedSkeleton:
    """Proper vertex partition; exact chromatic number via branch and bound.

    With ``exact`` the search branches on vertices ordered by degree (ties by
    index) under a greedy-clique lower bound; if the node budget runs out the
    best coloring found is returned with ``chromatic_exact=False``.
    """
    if g.n == 0:
        return PartitionedSkeleton(g, (), True)
    greedy = _greedy_coloring(g)
    k_greedy = max(greedy) + 1
    if not exact:
        return PartitionedSkeleton(g, _parts_from_colors(g, greedy), False)

    lower = _greedy_clique(g)
    best = list(greedy)
    best_k = k_greedy
    if best_k > lower:
        order = sorted(range(g.n), key=lambda v: (-g.degree(v), v))
        color = [-1] * g.n
        nodes = 0
        exhausted = False

        def dfs(i: int, used: int) -> bool:
            nonlocal best, best_k, nodes, exhausted
            if used >= best_k:
                return False
            if i == g.n:
                best = list(color)
                best_k = used
                return best_k == lower
            v = order[i]
            forbidden = {color[w] for w in g.neighbors(v) if color[w] != -1}
            for c in range(min(used + 1, best_k - 1)):
                if c in forbidden:
                    continue
                nodes += 1
                if nodes > budget:
                    exhausted = True
                    return True
                color[v] = c
                if dfs(i + 1, max(used, c + 1)):
                    color[v] = -1
                    return True
                color[v] = -1
            return False

        dfs(0, 0)
        if exhausted:
            return PartitionedSkeleton(g, _parts_from_colors(g, best), False)
    return PartitionedSkeleton(g, _parts_from_colors(g, best), True)


def _parts_from_colors(g: SimpleGraph, colors: Sequence[int]) -> tuple[frozenset[int], ...]:
    k = max(colors) + 1 if colors else 0
    return tuple(
        frozenset(v for v in range(g.n) if colors[v] == c) for c in range(k)
    )


# ---------------------------------------------------------------------------
# Family enumeration
# ---------------------------------------------------------------------------

#: Caps guarding against accidentally huge enumerations.
FAMILY_BUDGET = {
    "all_digraphs": 6,
    "tournaments": 8,
    "symmetric": 8,
    "eulerian": 7,
    "unicyclic_orientations": 8,
    "cactus_orientations": 8,
}

_PAIR_STATES = 4  # none, u->v, v->u, both


def _pairs(n: int) -> list[tuple[int, int]]:
    return [(u, v) for u in range(n) for v in range(u + 1, n)]


def family_size(family: str, n: int) -> int | None:
    """Closed-form instance count, where one exists."""
    p = n * (n - 1) // 2
    if family == "all_digraphs":
        return _PAIR_STATES**p
    if family in ("tournaments", "symmetric"):
        return 2**p
    return None


def _code_to_arcs(code: int, pairs: list[tuple[int, int]]) -> list[Arc]:
    arcs: list[Arc] = []
    for u, v in pairs:
        state = code & 3
        code >>= 2
        if state == 1:
            arcs.append((u, v))
        elif state == 2:
            arcs.append((v, u))
        elif state == 3:
            arcs.append((u, v))
            arcs.append((v, u))
    return arcs


def _iter_all_digraphs(n: int) -> Iterator[list[Arc]]:
    pairs = _pairs(n)
    for code in range(_PAIR_STATES ** len(pairs)):
        yield _code_to_arcs(code, pairs)


def _iter_tournaments(n: int) -> Iterator[list[Arc]]:
    pairs = _pairs(n)
    for code in range(2 ** len(pairs)):
        arcs: list[Arc] = []
        c = code
        for u, v in pairs:
            arcs.append((u, v) if c & 1 == 0 else (v, u))
            c >>= 1
        yield arcs


def _iter_symmetric(n: int) -> Iterator[list[Arc]]:
    pairs = _pairs(n)
    for code in range(2 ** len(pairs)):
        arcs: list[Arc] = []
        c = code
        for u, v in pairs:
            if c & 1:
                arcs.append((u, v))
                arcs.append((v, u))
            c >>= 1
        yield arcs


def _iter_balanced(n: int) -> Iterator[list[Arc]]:
    """All digraphs with outdegree == indegree at every vertex.

    Depth-first over the pair states with pruning on partial balanced
    degrees: once every pair incident to a vertex is decided its balance
    must be zero, and it can never exceed the number of undecided pairs.
    """
    pairs = _pairs(n)
    p = len(pairs)
    # remaining[i][v]: undecided pairs involving v among pairs[i:].
    remaining = [[0] * n for _ in range(p + 1)]
    for i in range(p - 1, -1, -1):
        u, v = pairs[i]
        for w in range(n):
            remaining[i][w] = remaining[i + 1][w] + (1 if w in (u, v) else 0)
    sigma = [0] * n
    chosen: list[int] = []

    def rec(i: int) -> Iterator[list[Arc]]:
        if i == p:
            yield _decode_pair_states(pairs, chosen)
            return
        u, v = pairs[i]
        for state in range(_PAIR_STATES):
            if state == 1:
                sigma[u] += 1
                sigma[v] -= 1
            elif state == 2:
                sigma[u] -= 1
                sigma[v] += 1
            chosen.append(state)
            if abs(sigma[u]) <= remaining[i + 1][u] and abs(sigma[v]) <= remaining[i + 1][v]:
                yield from rec(i + 1)
            chosen.pop()
            if state == 1:
                sigma[u] -= 1
                sigma[v] += 1
            elif state == 2:
                sigma[u] += 1
                sigma[v] -= 1

    yield from rec(0)


def _decode_pair_states(pairs: list[tuple[int, int]], states: list[int]) -> list[Arc]:
    arcs: list[Arc] = []
    for (u, v), state in zip(pairs, states):
        if state == 1:
            arcs.append((u, v))
        elif state == 2:
            arcs.append((v, u))
        elif state == 3:
            arcs.append((u, v))
            arcs.append((v, u))
    return arcs


def _arcs_connected(n: int, arcs: list[Arc]) -> bool:
    if n <= 1:
        return True
    adj: list[list[int]] = [[] for _ in range(n)]
    for u, v in arcs:
        adj[u].append(v)
        adj[v].append(u)
    seen = {0}
    stack = [0]
    while stack:
        v = stack.pop()
        for w in adj[v]:
            if w not in seen:
                seen.add(w)
                stack.append(w)
    return len(seen) == n


def _iter_eulerian(n: int) -> Iterator[list[Arc]]:
    for arcs in _iter_balanced(n):
        if _arcs_connected(n, arcs):
            yield arcs


def iter_unicyclic_skeletons(n: int) -> Iterator[SimpleGraph]:
    """All labeled connected graphs on n vertices with exactly one cycle."""
    if n < 3:
        return
    all_edges = _pairs(n)
    for combo in itertools.combinations(all_edges, n):
        if not _arcs_connected(n, list(combo)):
            continue
        yield SimpleGraph(n, combo)


def iter_cactus_skeletons(n: int) -> Iterator[SimpleGraph]:
    """All labeled connected cacti on n vertices (trees included)."""
    all_edges = _pairs(n)
    max_m = (3 * (n - 1)) // 2 if n > 1 else 0
    for m in range(max(n - 1, 0), max_m + 1):
        for combo in itertools.combinations(all_edges, m):
            if not _arcs_connected(n, list(combo)):
                continue
            g = SimpleGraph(n, combo)
            if is_cactus(g):
                yield g


def iter_orientations(g: SimpleGraph) -> Iterator[list[Arc]]:
    """All 2^m orientations of a simple graph, in edge-code order."""
    edges = g.edge_seq()
    for code in range(2 ** len(edges)):
        arcs: list[Arc] = []
        c = code
        for u, v in edges:
            arcs.append((u, v) if c & 1 == 0 else (v, u))
            c >>= 1
        yield arcs


def iter_digraphs_with_skeleton(g: SimpleGraph) -> Iterator[list[Arc]]:
    """All 3^m digraphs whose skeleton is exactly ``g``."""
    edges = g.edge_seq()
    for states in itertools.product(range(3), repeat=len(edges)):
        arcs: list[Arc] = []
        for (u, v), s in zip(edges, states):
            if s == 0:
                arcs.append((u, v))
            elif s == 1:
                arcs.append((v, u))
            else:
                arcs.append((u, v))
                arcs.append((v, u))
        yield arcs


def iter_family_arcs(
    family: str, n: int, graph: SimpleGraph | None = None, start: int = 0
) -> Iterator[tuple[int, list[Arc]]]:
    """Raw ``(n, arcs)`` stream for a family; the cheap path used by sweeps.

    ``start`` skips that many leading instances; code-indexed families jump
    there directly, the others skip by enumeration.
    """
    if family in FAMILY_BUDGET and n > FAMILY_BUDGET[family]:
        raise ValueError(f"family {family!r} with n={n} exceeds the configured budget")
    if family == "all_digraphs":
        pairs = _pairs(n)
        total = _PAIR_STATES ** len(pairs)
        yield from (
            (n, _code_to_arcs(code, pairs)) for code in range(min(start, total), total)
        )
        return
    if family == "tournaments":
        stream = _iter_tournaments(n)
    elif family == "symmetric":
        stream = _iter_symmetric(n)
    elif family == "eulerian":
        stream = _iter_eulerian(n)
    elif family == "unicyclic_orientations":
        stream = (
            arcs
            for g2 in iter_unicyclic_skeletons(n)
            for arcs in iter_orientations(g2)
        )
    elif family == "cactus_orientations":
        stream = (
            arcs
            for g2 in iter_cactus_skeletons(n)
            for arcs in iter_orientations(g2)
        )
    elif family == "orientations_of":
        if graph is None:
            raise ValueError("family 'orientations_of' needs a base graph")
        n = graph.n
        stream = iter_orientations(graph)
    elif family == "skeleton_digraphs":
        if graph is None:
            raise ValueError("family 'skeleton_digraphs' needs a base graph")
        n = graph.n
        stream = iter_digraphs_with_skeleton(graph)
    else:
        raise ValueError(f"unknown family {family!r}")
    yield from ((n, arcs) for arcs in itertools.islice(stream, start, None))


def canonical_code(d: Digraph) -> tuple[Arc, ...]:
    """Minimum arc tuple over all vertex relabelings (brute force, n <= 8)."""
    if d.n > 8:
        raise ValueError("canonical form by permutation brute force is limited to n <= 8")
    best: tuple[Arc, ...] | None = None
    for perm in itertools.permutations(range(d.n)):
        relabeled = tuple(sorted((perm[u], perm[v]) for u, v in d.arcs))
        if best is None or relabeled < best:
            best = relabeled
    return best if best is not None else ()


def enumerate_family(
    family: str,
    n: int,
    graph: SimpleGraph | None = None,
    dedup_canonical: bool = False,
) -> Iterator[Digraph]:
    """Exhaustive, deterministic stream of labeled digraphs from a family.

    With ``dedup_canonical`` only the first representative of each
    isomorphism class is yielded (brute-force canonical forms; n <= 8).
    """
    seen: set[tuple[Arc, ...]] = set()
    for size, arcs in iter_family_arcs(family, n, graph):
        d = Digraph._from_trusted(size, frozenset(arcs))
        if dedup_canonical:
            code = canonical_code(d)
            if code in seen:
                continue
            seen.add(code)
        yield d


def log_ceil(value: int, base: int) -> int:
    """Smallest l with base**l >= value (l >= 1 for value >= 2)."""
    if value <= 1:
        return 0
    l_est = max(1, math.ceil(math.log(value, base)))
    while base**l_est < value:
        l_est += 1
    while l_est > 1 and base ** (l_est - 1) >= value:
        l_est -= 1
    return l_est
