import random

import pytest

from irrlab.digraph import Digraph, SimpleGraph, build_digraph, enumerate_family, reverse
from irrlab.irregularity import (
    ArcColoring,
    Mode,
    is_irregular,
    is_irregular_graph,
    verify_coloring,
)

EXAMPLE_ARCS = [(1, 0), (1, 2), (3, 1), (3, 4), (4, 3)]


def directed_cycle(n):
    return Digraph(n, [(i, (i + 1) % n) for i in range(n)])


def induced_class_digraph(d, coloring, c):
    return Digraph(d.n, coloring.class_arcs(c))


def test_single_arc_irregular_modes():
    d = build_digraph(2, [(0, 1)])
    for mode in (Mode.WEAK, Mode.STRONG, Mode.PP, Mode.MM):
        assert is_irregular(d, mode).verdict, mode
    # A lone arc is a source-to-sink path: outdegree of the tail equals the
    # indegree of the head, so the mixed-statistic modes reject it.
    assert not is_irregular(d, Mode.PM).verdict
    assert not is_irregular(d, Mode.MP).verdict


def test_example_digraph_not_weak_irregular():
    d = build_digraph(5, EXAMPLE_ARCS)
    cert = is_irregular(d, Mode.WEAK)
    assert not cert.verdict
    # The failing arc joins the two vertices with identical (2, 1) profiles.
    assert [v.arc for v in cert.violations] == [(3, 1)]
    assert cert.violations[0].tail_value == (2, 1)


def test_near_balanced_star_not_strong_irregular():
    # Orientation of a 3-star: one arc into the center, two out.
    d = build_digraph(4, [(1, 0), (0, 2), (0, 3)])
    cert = is_irregular(d, Mode.STRONG)
    assert not cert.verdict
    # Both ends of the in-arc have balanced degree 1.
    assert cert.violations[0].arc == (1, 0)
    assert cert.violations[0].tail_value == 1


def test_is_irregular_rejects_graph_mode():
    with pytest.raises(ValueError):
        is_irregular(build_digraph(2, [(0, 1)]), Mode.GRAPH)


def test_is_irregular_graph():
    star = SimpleGraph(4, [(0, 1), (0, 2), (0, 3)])
    assert is_irregular_graph(star).verdict

    single = SimpleGraph(2, [(0, 1)])
    assert not is_irregular_graph(single).verdict

    path2 = SimpleGraph(3, [(0, 1), (1, 2)])
    assert is_irregular_graph(path2).verdict


def test_verify_coloring_examples():
    c3 = directed_cycle(3)
    good = ArcColoring({(0, 1): 1, (1, 2): 2, (2, 0): 1}, 2)
    assert verify_coloring(c3, good, Mode.STRONG).verdict

    allone = ArcColoring({a: 1 for a in c3.arcs}, 1)
    cert = verify_coloring(c3, allone, Mode.WEAK)
    assert not cert.verdict and len(cert.violations) == 3

    ex = build_digraph(5, EXAMPLE_ARCS)
    rainbow = ArcColoring({a: i + 1 for i, a in enumerate(ex.arc_seq())}, ex.m)
    for mode in (Mode.WEAK, Mode.STRONG, Mode.PP, Mode.MM):
        assert verify_coloring(ex, rainbow, mode).verdict


def test_verify_coloring_totality_errors():
    c3 = directed_cycle(3)
    with pytest.raises(ValueError):
        verify_coloring(c3, ArcColoring({(0, 1): 1}, 1), Mode.WEAK)
    with pytest.raises(ValueError):
        ArcColoring({(0, 1): 3}, 2)


def test_verify_reports_empty_classes():
    d = build_digraph(2, [(0, 1)])
    col = ArcColoring({(0, 1): 1}, 2)
    assert col.empty_classes() == [2]
    assert verify_coloring(d, col, Mode.WEAK).verdict


def test_verify_graph_mode():
    g = SimpleGraph(3, [(0, 1), (1, 2)])
    one = ArcColoring({(0, 1): 1, (1, 2): 1}, 1)
    assert verify_coloring(g, one, Mode.GRAPH).verdict
    split = ArcColoring({(0, 1): 1, (1, 2): 2}, 2)
    # Each class is a lone edge: degrees 1-1 on both sides.
    cert = verify_coloring(g, split, Mode.GRAPH)
    assert not cert.verdict and len(cert.violations) == 2


def exhaustive_small():
    for n in (1, 2, 3):
        yield from enumerate_family("all_digraphs", n)


def test_strong_implies_weak_exhaustive():
    for d in exhaustive_small():
        if is_irregular(d, Mode.STRONG).verdict:
            assert is_irregular(d, Mode.WEAK).verdict


def test_pp_implies_weak_exhaustive():
    for d in exhaustive_small():
        if is_irregular(d, Mode.PP).verdict:
            assert is_irregular(d, Mode.WEAK).verdict


def test_reversal_dualities(random_corpus):
    for d in random_corpus[:250]:
        r = reverse(d)
        assert is_irregular(d, Mode.WEAK).verdict == is_irregular(r, Mode.WEAK).verdict
        assert is_irregular(d, Mode.STRONG).verdict == is_irregular(r, Mode.STRONG).verdict
        assert is_irregular(d, Mode.PP).verdict == is_irregular(r, Mode.MM).verdict
        assert is_irregular(d, Mode.PM).verdict == is_irregular(r, Mode.PM).verdict


def test_verdict_equals_no_violations(random_corpus):
    for d in random_corpus[:200]:
        cert = is_irregular(d, Mode.WEAK)
        assert cert.verdict == (len(cert.violations) == 0)


def random_coloring(rng, d, c):
    return ArcColoring({a: rng.randint(1, c) for a in d.arc_seq()}, c)


def test_verify_matches_per_class_recomputation(random_corpus):
    # Independent oracle: build each class as its own digraph and check it whole.
    rng = random.Random(99)
    for d in random_corpus[:200]:
        if d.m == 0:
            continue
        col = random_coloring(rng, d, rng.randint(1, 3))
        for mode in (Mode.WEAK, Mode.STRONG, Mode.PP):
            expected = all(
                is_irregular(induced_class_digraph(d, col, c), mode).verdict
                for c in col.used_classes()
            )
            assert verify_coloring(d, col, mode).verdict == expected


def test_unique_colors_always_verify(random_corpus):
    # A one-arc class is irregular in the pair, balanced and same-statistic
    # senses; the mixed pm/mp senses reject lone arcs so they are excluded.
    for d in random_corpus[:100]:
        if d.m == 0:
            continue
        rainbow = ArcColoring({a: i + 1 for i, a in enumerate(d.arc_seq())}, d.m)
        for mode in (Mode.WEAK, Mode.STRONG, Mode.PP, Mode.MM):
            assert verify_coloring(d, rainbow, mode).verdict
