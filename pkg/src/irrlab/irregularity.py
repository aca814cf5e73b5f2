"""Adjacent-vertex distinguishing predicates and the coloring verifier.

Two vertices joined by an arc can be distinguished by their full
outdegree-indegree pair (``weak``), by their balanced degree
outdegree-minus-indegree (``strong``), by one chosen degree statistic on each
side (``pp``/``pm``/``mp``/``mm``), or, for simple graphs, by their plain
degree (``graph``).  A coloring is feasible when every color class, with
degrees recounted inside the class only, satisfies the predicate on each of
its arcs; vertices isolated in a class impose no constraint.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Mapping

from .digraph import Arc, Digraph, SimpleGraph


class Mode(str, enum.Enum):
    """Which distinguishing rule applies; values are the wire/CLI names."""

    WEAK = "weak"
    STRONG = "strong"
    PP = "pp"
    PM = "pm"
    MP = "mp"
    MM = "mm"
    GRAPH = "graph"

    @property
    def is_digraph_mode(self) -> bool:
        return self is not Mode.GRAPH


#: The four one-statistic-per-side instantiations, as (tail stat, head stat).
AB_STATS = {
    Mode.PP: ("+", "+"),
    Mode.PM: ("+", "-"),
    Mode.MP: ("-", "+"),
    Mode.MM: ("-", "-"),
}


@dataclass(frozen=True)
class Violation:
    """One arc on which the predicate fails; records the two equal values."""

    arc: Arc
    color: int | None
    tail_value: object
    head_value: object


@dataclass(frozen=True)
class Certificate:
    mode: Mode
    verdict: bool
    violations: tuple[Violation, ...]

    def __post_init__(self) -> None:
        if self.verdict != (not self.violations):
            raise ValueError("verdict must equal 'no violations'")


class ArcColoring:
    """Total map from arcs to colors ``1..num_colors``.

    Empty color classes are permitted; :meth:`empty_classes` reports them.
    """

    __slots__ = ("colors", "num_colors")

    def __init__(self, colors: Mapping[Arc, int], num_colors: int):
        if num_colors < 0:
            raise ValueError("number of colors must be nonnegative")
        for arc, c in colors.items():
            if not (1 <= c <= num_colors):
                raise ValueError(f"color {c} of arc {arc} outside 1..{num_colors}")
        self.colors = dict(colors)
        self.num_colors = num_colors

    def color_of(self, arc: Arc) -> int:
        return self.colors[arc]

    def class_arcs(self, c: int) -> list[Arc]:
        return sorted(a for a, k in self.colors.items() if k == c)

    def used_classes(self) -> list[int]:
        return sorted(set(self.colors.values()))

    def nonempty_class_count(self) -> int:
        return len(set(self.colors.values()))

    def empty_classes(self) -> list[int]:
        used = set(self.colors.values())
        return [c for c in range(1, self.num_colors + 1) if c not in used]

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, ArcColoring)
            and self.colors == other.colors
            and self.num_colors == other.num_colors
        )

    def __repr__(self) -> str:
        return f"ArcColoring({self.colors!r}, num_colors={self.num_colors})"


def _value(out_deg: int, in_deg: int, mode: Mode, side: str) -> object:
    if mode is Mode.WEAK:
        return (out_deg, in_deg)
    if mode is Mode.STRONG:
        return out_deg - in_deg
    stat = AB_STATS[mode][0 if side == "tail" else 1]
    return out_deg if stat == "+" else in_deg


def _check_arcs(
    arcs, out_deg: Mapping[int, int], in_deg: Mapping[int, int], mode: Mode, color: int | None
) -> list[Violation]:
    violations = []
    for u, v in arcs:
        tv = _value(out_deg[u], in_deg[u], mode, "tail")
        hv = _value(out_deg[v], in_deg[v], mode, "head")
        if tv == hv:
            violations.append(Violation((u, v), color, tv, hv))
    return violations


def is_irregular(d: Digraph, mode: Mode) -> Certificate:
    """Check the mode predicate on every arc of ``d`` over its own degrees."""
    if mode is Mode.GRAPH:
        raise ValueError("mode 'graph' applies to SimpleGraph inputs; use is_irregular_graph")
    out_deg = {v: d.out_degree(v) for v in range(d.n)}
    in_deg = {v: d.in_degree(v) for v in range(d.n)}
    violations = _check_arcs(d.arc_seq(), out_deg, in_deg, mode, None)
    return Certificate(mode, not violations, tuple(violations))


def is_irregular_graph(g: SimpleGraph) -> Certificate:
    """Adjacent vertices must have different degrees."""
    violations = []
    for u, v in g.edge_seq():
        if g.degree(u) == g.degree(v):
            violations.append(Violation((u, v), None, g.degree(u), g.degree(v)))
    return Certificate(Mode.GRAPH, not violations, tuple(violations))


def verify_coloring(
    target: Digraph | SimpleGraph, coloring: ArcColoring, mode: Mode
) -> Certificate:
    """Verify that every color class induces an irregular sub(di)graph.

    Degrees are recomputed within each class only.  Raises when the coloring
    is not total on the arc set or uses a color outside ``1..num_colors``.
    """
    if mode is Mode.GRAPH:
        if not isinstance(target, SimpleGraph):
            raise ValueError("mode 'graph' needs a SimpleGraph")
        arcs = target.edge_seq()
    else:
        if not isinstance(target, Digraph):
            raise ValueError(f"mode '{mode.value}' needs a Digraph")
        arcs = target.arc_seq()

    missing = [a for a in arcs if a not in coloring.colors]
    if missing:
        raise ValueError(f"coloring is not total: {len(missing)} uncolored arcs, first {missing[0]}")
    extra = [a for a in coloring.colors if a not in set(arcs)]
    if extra:
        raise ValueError(f"coloring mentions arcs outside the target: first {extra[0]}")

    violations: list[Violation] = []
    for c in coloring.used_classes():
        class_arcs = [a for a in arcs if coloring.colors[a] == c]
        out_deg: dict[int, int] = {}
        in_deg: dict[int, int] = {}
        for u, v in class_arcs:
            out_deg[u] = out_deg.get(u, 0) + 1
            in_deg[v] = in_deg.get(v, 0) + 1
            if mode is Mode.GRAPH:
                # Undirected: count the edge at both ends.
                out_deg[v] = out_deg.get(v, 0) + 1
                in_deg[u] = in_deg.get(u, 0) + 1
        for u, v in class_arcs:
            out_deg.setdefault(u, 0)
            out_deg.setdefault(v, 0)
            in_deg.setdefault(u, 0)
            in_deg.setdefault(v, 0)
        if mode is Mode.GRAPH:
            deg = {x: out_deg[x] for x in out_deg}
            for u, v in class_arcs:
                if deg[u] == deg[v]:
                    violations.append(Violation((u, v), c, deg[u], deg[v]))
        else:
            violations.extend(_check_arcs(class_arcs, out_deg, in_deg, mode, c))

    violations.sort(key=lambda viol: (viol.arc, viol.color))
    return Certificate(mode, not violations, tuple(violations))
