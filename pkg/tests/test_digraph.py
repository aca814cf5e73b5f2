import itertools

import pytest

from irrlab.digraph import (
    Digraph,
    SimpleGraph,
    build_digraph,
    canonical_code,
    classify,
    degree_profile,
    enumerate_family,
    is_cactus,
    iter_unicyclic_skeletons,
    log_ceil,
    pendant_structure,
    proper_color_skeleton,
    reverse,
    skeleton,
)

# The 5-vertex running example: arcs v2v1, v2v3, v4v2, v4v5, v5v4 relabeled 0-based.
EXAMPLE_ARCS = [(1, 0), (1, 2), (3, 1), (3, 4), (4, 3)]


def directed_cycle(n):
    return Digraph(n, [(i, (i + 1) % n) for i in range(n)])


def test_build_digraph_basic():
    d = build_digraph(2, [(0, 1)])
    assert d.m == 1 and d.n == 2
    assert d.has_arc(0, 1) and not d.has_arc(1, 0)


def test_build_digraph_example():
    d = build_digraph(5, EXAMPLE_ARCS)
    assert d.m == 5
    assert d.out_degree(1) == 2 and d.in_degree(1) == 1


def test_build_digraph_rejects_loops_duplicates_and_range():
    with pytest.raises(ValueError):
        build_digraph(2, [(0, 0)])
    with pytest.raises(ValueError):
        build_digraph(2, [(0, 1), (0, 1)])
    with pytest.raises(ValueError):
        build_digraph(2, [(0, 2)])


def test_degree_profile():
    d3 = directed_cycle(3)
    p = degree_profile(d3, 0)
    assert p.pair == (1, 1) and p.balanced == 0

    ex = build_digraph(5, EXAMPLE_ARCS)
    assert degree_profile(ex, 1).pair == (2, 1)
    assert degree_profile(ex, 3).pair == (2, 1)

    single = build_digraph(2, [(0, 1)])
    assert degree_profile(single, 0).pair == (1, 0)
    assert degree_profile(single, 0).balanced == 1

    with pytest.raises(ValueError):
        degree_profile(single, 5)


def test_degree_sums_match_arc_count(random_corpus):
    for d in random_corpus[:300]:
        outs = sum(d.out_degree(v) for v in range(d.n))
        ins = sum(d.in_degree(v) for v in range(d.n))
        assert outs == ins == d.m


def test_skeleton():
    pair = build_digraph(2, [(0, 1), (1, 0)])
    assert skeleton(pair).edges == frozenset({(0, 1)})

    tri = skeleton(directed_cycle(3))
    assert tri.edges == frozenset({(0, 1), (1, 2), (0, 2)})

    ex = skeleton(build_digraph(5, EXAMPLE_ARCS))
    # The example's skeleton is a 5-vertex tree.
    assert ex.m == 4
    assert sorted(ex.degree(v) for v in range(5)) == [1, 1, 1, 2, 3]


def test_reverse_involution():
    single = build_digraph(2, [(0, 1)])
    assert reverse(single).arcs == frozenset({(1, 0)})
    c3 = directed_cycle(3)
    assert reverse(c3).arcs == frozenset({(1, 0), (2, 1), (0, 2)})
    ex = build_digraph(5, EXAMPLE_ARCS)
    assert reverse(reverse(ex)) == ex


def test_skeleton_invariant_under_reversal(random_corpus):
    for d in random_corpus[:200]:
        assert skeleton(reverse(d)) == skeleton(d)


def test_classify_examples():
    sym_pair = build_digraph(2, [(0, 1), (1, 0)])
    f = classify(sym_pair)
    assert f.is_symmetric and not f.is_orientation

    c3 = directed_cycle(3)
    f = classify(c3)
    assert f.is_eulerian and f.is_tournament and not f.is_acyclic
    assert f.is_orientation_of_regular

    trans = build_digraph(3, [(0, 1), (0, 2), (1, 2)])
    f = classify(trans)
    assert f.is_acyclic and not f.is_eulerian and f.is_tournament


def test_classify_skeleton_flags():
    path = build_digraph(3, [(0, 1), (1, 2)])
    f = classify(path)
    assert f.skeleton_tree and f.skeleton_bipartite and f.skeleton_cactus
    assert not f.skeleton_unicyclic

    c4 = directed_cycle(4)
    f = classify(c4)
    assert f.skeleton_unicyclic and f.skeleton_bipartite and not f.skeleton_tree

    c5 = directed_cycle(5)
    assert classify(c5).skeleton_unicyclic and not classify(c5).skeleton_bipartite


def test_classify_reversal_preserved(random_corpus):
    for d in random_corpus[:150]:
        f1 = classify(d)
        f2 = classify(reverse(d))
        assert f1.is_eulerian == f2.is_eulerian
        assert f1.is_symmetric == f2.is_symmetric
        assert f1.is_tournament == f2.is_tournament
        assert f1.is_orientation == f2.is_orientation


def double_triangle():
    return SimpleGraph(5, [(0, 1), (0, 2), (1, 2), (0, 3), (0, 4), (3, 4)])


def test_pendant_structure_triangle_with_pendant():
    g = SimpleGraph(4, [(0, 1), (1, 2), (0, 2), (0, 3)])
    ps = pendant_structure(g)
    assert ps.pendant_trees == ((0, frozenset({0, 3})),)
    assert len(ps.pendant_cycles) == 1
    assert set(ps.pendant_cycles[0]) == {0, 1, 2}
    assert ps.bridge_forest == frozenset({(0, 3)})


def test_pendant_structure_two_triangles_sharing_a_vertex():
    ps = pendant_structure(double_triangle())
    assert len(ps.pendant_cycles) == 2
    assert ps.pendant_trees == ()
    assert ps.bridge_forest == frozenset()


def test_pendant_structure_path():
    g = SimpleGraph(4, [(0, 1), (1, 2), (2, 3)])
    ps = pendant_structure(g)
    assert ps.pendant_cycles == ()
    assert ps.bridge_forest == g.edges


def test_pendant_structure_rejects_non_cactus():
    k4 = SimpleGraph(4, list(itertools.combinations(range(4), 2)))
    assert not is_cactus(k4)
    with pytest.raises(ValueError):
        pendant_structure(k4)


def test_pendant_cycles_edge_disjoint_and_cover():
    # Chain of three triangles plus a tail: a cactus.
    g = SimpleGraph(
        8,
        [(0, 1), (1, 2), (0, 2), (2, 3), (3, 4), (2, 4), (4, 5), (5, 6), (4, 6), (6, 7)],
    )
    ps = pendant_structure(g)
    cycle_edges = set()
    for cyc in ps.all_cycles:
        edges = {tuple(sorted((cyc[i], cyc[(i + 1) % len(cyc)]))) for i in range(len(cyc))}
        assert not (cycle_edges & edges)
        cycle_edges |= edges
    assert cycle_edges | ps.bridge_forest == g.edges
    # Middle triangle is not pendant here (its removal leaves two cyclic parts).
    assert len(ps.pendant_cycles) == 2
    assert len(ps.all_cycles) == 3
    assert {tuple(sorted(c)) for c in ps.pendant_cycles} <= {
        tuple(sorted(c)) for c in ps.all_cycles
    }


def test_proper_color_skeleton():
    even = SimpleGraph(4, [(0, 1), (1, 2), (2, 3), (0, 3)])
    assert len(proper_color_skeleton(even, exact=True).parts) == 2

    odd = SimpleGraph(5, [(0, 1), (1, 2), (2, 3), (3, 4), (0, 4)])
    ps = proper_color_skeleton(odd, exact=True)
    assert len(ps.parts) == 3 and ps.chromatic_exact

    k4 = SimpleGraph(4, list(itertools.combinations(range(4), 2)))
    ps = proper_color_skeleton(k4, exact=True)
    assert len(ps.parts) == 4
    assert all(len(p) == 1 for p in ps.parts)


def test_proper_color_parts_are_independent(random_corpus):
    for d in random_corpus[:60]:
        g = skeleton(d)
        ps = proper_color_skeleton(g, exact=g.n <= 7)
        cover = set()
        for part in ps.parts:
            for u in part:
                for v in part:
                    if u < v:
                        assert not g.has_edge(u, v)
            assert not (cover & part)
            cover |= part
        assert cover == set(range(g.n))


def test_enumerate_family_counts():
    assert sum(1 for _ in enumerate_family("all_digraphs", 2)) == 4
    assert sum(1 for _ in enumerate_family("tournaments", 3)) == 8
    assert sum(1 for _ in enumerate_family("all_digraphs", 4)) == 4096
    assert sum(1 for _ in enumerate_family("symmetric", 3)) == 8


def test_enumerate_family_budget():
    with pytest.raises(ValueError):
        list(enumerate_family("all_digraphs", 9))


def test_enumerate_family_all_are_valid():
    for d in enumerate_family("all_digraphs", 3):
        Digraph(d.n, list(d.arcs))  # revalidates


def test_enumerate_eulerian_small():
    # n=3: the two directed triangles, plus symmetric pairs combinations that balance.
    eulerians = list(enumerate_family("eulerian", 3))
    for d in eulerians:
        assert classify(d).is_eulerian
    # Exhaustive cross-check against the definition.
    expected = [
        d for d in enumerate_family("all_digraphs", 3) if classify(d).is_eulerian
    ]
    assert {d.arcs for d in eulerians} == {d.arcs for d in expected}
    assert len(eulerians) == len(expected)


def test_enumerate_unicyclic_orientations():
    skels = list(iter_unicyclic_skeletons(4))
    assert len(skels) == 15  # labeled connected unicyclic graphs on 4 vertices
    insts = list(enumerate_family("unicyclic_orientations", 4))
    assert len(insts) == 15 * 16
    for d in insts[:64]:
        f = classify(d)
        assert f.is_orientation and f.skeleton_unicyclic


def test_enumerate_dedup_canonical():
    total = sum(1 for _ in enumerate_family("tournaments", 3))
    deduped = sum(1 for _ in enumerate_family("tournaments", 3, dedup_canonical=True))
    assert total == 8 and deduped == 2  # transitive and cyclic triangle


def test_canonical_code_is_isomorphism_invariant():
    a = Digraph(3, [(0, 1), (1, 2)])
    b = Digraph(3, [(2, 0), (0, 1)])
    assert canonical_code(a) == canonical_code(b)


def test_log_ceil():
    assert log_ceil(1, 3) == 0
    assert log_ceil(3, 3) == 1
    assert log_ceil(4, 3) == 2
    assert log_ceil(9, 3) == 2
    assert log_ceil(10, 3) == 3
    assert log_ceil(4, 2) == 2
    assert log_ceil(5, 2) == 3
