import itertools
import random

import pytest

from irrlab.cactus import (
    BLUE,
    FAR,
    RED,
    CaseSpec,
    CoreArc,
    StarOrientation,
    boundary_degree_bound,
    check_case,
    check_case_via_solver,
    claim_raw_slots,
    color_unicyclic_strong,
    extend_over_star,
    iter_claim_specs,
    naive_check_case,
    realize_spec,
    star_palette,
    star_status,
)
from irrlab.digraph import Digraph, iter_unicyclic_skeletons, iter_orientations
from irrlab.irregularity import ArcColoring, Mode, is_irregular, verify_coloring
from irrlab.solver import exact_index


# --- star observations ---------------------------------------------------------


def brute_star_palette(s: StarOrientation):
    """Oracle: enumerate all 2^k colorings and collect distinct balance pairs."""
    d = s.as_digraph()
    arcs = d.arc_seq()
    pairs = set()
    for colors in itertools.product((BLUE, RED), repeat=len(arcs)):
        blue = red = 0
        for (u, v), c in zip(arcs, colors):
            delta = 1 if u == 0 else -1
            if c == BLUE:
                blue += delta
            else:
                red += delta
        pairs.add((blue, red))
    return pairs


def test_star_palette_examples():
    p = star_palette(StarOrientation(2, 1))
    assert len(p) == 4
    assert [e.blue_balance for e in p] == [-1, 0, 1, 2]

    p = star_palette(StarOrientation(1, 0))
    assert [e.blue_balance for e in p] == [0, 1]

    p = star_palette(StarOrientation(0, 3))
    assert [e.blue_balance for e in p] == [-3, -2, -1, 0]
    assert brute_star_palette(StarOrientation(0, 3)) == {
        (e.blue_balance, e.red_balance) for e in star_palette(StarOrientation(0, 3))
    }


def test_star_palette_all_small_stars():
    for k in range(1, 9):
        for a in range(k + 1):
            s = StarOrientation(a, k - a)
            entries = star_palette(s)
            assert len(entries) == k + 1
            assert len({e.blue_balance for e in entries}) == k + 1
            assert len({e.red_balance for e in entries}) == k + 1
            for e in entries:
                assert e.blue_balance + e.red_balance == a - (k - a)
                assert 0 <= e.blue_out <= a and 0 <= e.blue_in <= k - a
            assert {(e.blue_balance, e.red_balance) for e in entries} == brute_star_palette(s)


def test_star_status_matches_direct_check():
    for k in range(1, 9):
        for a in range(k + 1):
            s = StarOrientation(a, k - a)
            direct = is_irregular(s.as_digraph(), Mode.STRONG).verdict
            assert (star_status(s) == "irregular") == direct
            if star_status(s) == "near_balanced":
                assert s.a > 0 and s.b > 0 and abs(s.a - s.b) == 1


def test_star_status_examples():
    assert star_status(StarOrientation(3, 0)) == "irregular"
    assert star_status(StarOrientation(2, 1)) == "near_balanced"
    # One arc in, one out: balances run 1, 0, -1 along the path, so this
    # orientation distinguishes all its arcs.
    assert star_status(StarOrientation(1, 1)) == "irregular"


# --- star extension --------------------------------------------------------------


def colored_path():
    # 0 -> 1 -> 2 with a strong 2-coloring; vertex 2 is pendant.
    d = Digraph(3, [(0, 1), (1, 2)])
    col = ArcColoring({(0, 1): BLUE, (1, 2): BLUE}, 2)
    assert verify_coloring(d, col, Mode.STRONG).verdict
    return d, col


def test_extend_over_star_irregular_monochromatic():
    d, col = colored_path()
    enlarged, merged = extend_over_star(d, col, 2, StarOrientation(3, 0))
    assert enlarged.n == 6
    assert verify_coloring(enlarged, merged, Mode.STRONG).verdict
    # Old arcs unchanged; the new arcs all take the opposite color.
    assert merged.colors[(0, 1)] == BLUE and merged.colors[(1, 2)] == BLUE
    assert all(merged.colors[(2, x)] == RED for x in (3, 4, 5))


def test_extend_over_star_near_balanced():
    d, col = colored_path()
    enlarged, merged = extend_over_star(d, col, 2, StarOrientation(2, 1))
    assert verify_coloring(enlarged, merged, Mode.STRONG).verdict
    for arc, c in col.colors.items():
        assert merged.colors[arc] == c

    enlarged, merged = extend_over_star(d, col, 2, StarOrientation(1, 2))
    assert verify_coloring(enlarged, merged, Mode.STRONG).verdict


def test_extend_over_star_requires_pendant_vertex():
    d = Digraph(3, [(0, 1), (1, 2), (2, 0)])
    col = ArcColoring({(0, 1): 1, (1, 2): 2, (2, 0): 1}, 2)
    with pytest.raises(ValueError):
        extend_over_star(d, col, 0, StarOrientation(1, 0))


def test_extend_over_star_random_strong_colorings():
    rng = random.Random(7)
    for _ in range(200):
        length = rng.randint(1, 4)
        arcs = []
        for i in range(length):
            arcs.append((i, i + 1) if rng.random() < 0.5 else (i + 1, i))
        d = Digraph(length + 1, arcs)
        res = exact_index(d, Mode.STRONG, max_colors=2)
        if res.index is None or res.witness.num_colors != 2:
            coloring = ArcColoring(dict(res.witness.colors), 2)
        else:
            coloring = res.witness
        a = rng.randint(0, 3)
        b = rng.randint(0, 3)
        if a + b == 0:
            a = 1
        enlarged, merged = extend_over_star(d, coloring, length, StarOrientation(a, b))
        assert verify_coloring(enlarged, merged, Mode.STRONG).verdict


# --- unicyclic strong colorings ----------------------------------------------------


def test_color_unicyclic_directed_triangle():
    d = Digraph(3, [(0, 1), (1, 2), (2, 0)])
    col = color_unicyclic_strong(d)
    assert col.num_colors == 2
    assert verify_coloring(d, col, Mode.STRONG).verdict
    assert exact_index(d, Mode.STRONG).index == 2


def test_color_unicyclic_c5_with_star():
    arcs = [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0), (0, 5), (6, 0), (7, 0)]
    d = Digraph(8, arcs)
    col = color_unicyclic_strong(d)
    assert verify_coloring(d, col, Mode.STRONG).verdict
    assert exact_index(d, Mode.STRONG).index <= 2


def test_color_unicyclic_c4_orientation():
    d = Digraph(4, [(0, 1), (2, 1), (2, 3), (0, 3)])
    col = color_unicyclic_strong(d)
    assert verify_coloring(d, col, Mode.STRONG).verdict


def test_color_unicyclic_rejects_non_unicyclic():
    with pytest.raises(ValueError):
        color_unicyclic_strong(Digraph(3, [(0, 1), (1, 2)]))
    with pytest.raises(ValueError):
        color_unicyclic_strong(Digraph(2, [(0, 1), (1, 0)]))


def test_color_unicyclic_exhaustive_small():
    for n in (3, 4, 5):
        for g in iter_unicyclic_skeletons(n):
            for arcs in iter_orientations(g):
                d = Digraph(n, arcs)
                col = color_unicyclic_strong(d)
                assert verify_coloring(d, col, Mode.STRONG).verdict


def test_color_unicyclic_deep_trees():
    # Odd cycle with a two-level tree: forces peeling before the surgery.
    arcs = [(0, 1), (1, 2), (2, 0), (0, 3), (3, 4), (3, 5), (4, 6), (6, 7)]
    d = Digraph(8, arcs)
    col = color_unicyclic_strong(d)
    assert verify_coloring(d, col, Mode.STRONG).verdict
    assert exact_index(d, Mode.STRONG).index <= 2


# --- case engine --------------------------------------------------------------------


def figure_case_one() -> CaseSpec:
    return CaseSpec(
        core_arcs=(
            CoreArc("v1", "v0", BLUE),
            CoreArc("v1", "v2", None),
            CoreArc("v3", "v2", RED),
        ),
        boundary=(("v0", ((BLUE, 2),)), ("v3", ((RED, -2),))),
        stubs=(("v1", (0, 1)), ("v2", (1, 0))),
    )


def test_check_case_trivial_far():
    spec = CaseSpec(
        core_arcs=(CoreArc("a", "b", None), CoreArc("b", "w", BLUE)),
        boundary=(("w", ((BLUE, FAR),)),),
    )
    verdict = check_case(spec)
    assert verdict.extendable and verdict.witness is not None


def test_check_case_figure_configuration():
    spec = figure_case_one()
    assert not check_case(spec).extendable
    assert not naive_check_case(spec)
    assert not check_case_via_solver(spec)
    assert boundary_degree_bound(spec, "v0") >= 4
    assert boundary_degree_bound(spec, "v3") >= 4


def test_check_case_far_relaxation_restores_extension():
    spec = figure_case_one()
    relaxed = CaseSpec(
        core_arcs=spec.core_arcs,
        boundary=(("v0", ((BLUE, FAR),)), ("v3", ((RED, -2),))),
        stubs=spec.stubs,
    )
    assert check_case(relaxed).extendable


def test_check_case_rejects_malformed_specs():
    with pytest.raises(ValueError):
        CaseSpec(
            core_arcs=(CoreArc("a", "b", None),),
            boundary=(("a", ((BLUE, 0),)), ("b", ((BLUE, 0),))),
        ).validate()
    with pytest.raises(ValueError):
        CaseSpec(
            core_arcs=(CoreArc("a", "w", None),),
            boundary=(("w", ((BLUE, 0),)),),
        ).validate()
    with pytest.raises(ValueError):
        CaseSpec(
            core_arcs=(CoreArc("a", "w", BLUE),),
            boundary=(("w", ((BLUE, 99),)),),
        ).validate()


def random_case_spec(rng: random.Random) -> CaseSpec:
    interior = ["a", "b", "c"][: rng.randint(1, 3)]
    core = []
    used_pairs = set()
    for i in range(len(interior) - 1):
        t, h = interior[i], interior[i + 1]
        if rng.random() < 0.5:
            t, h = h, t
        color = rng.choice([None, BLUE, RED])
        core.append(CoreArc(t, h, color))
        used_pairs.add((t, h))
    boundary = []
    for i, name in enumerate(interior):
        if rng.random() < 0.7:
            bname = f"w{i}"
            orient = rng.random() < 0.5
            color = rng.choice([BLUE, RED])
            core.append(
                CoreArc(name, bname, color) if orient else CoreArc(bname, name, color)
            )
            declared = rng.choice([FAR] + list(range(-4, 5)))
            boundary.append((bname, ((color, declared),)))
    stubs = []
    for name in interior:
        if rng.random() < 0.6:
            a = rng.randint(0, 2)
            b = rng.randint(0, 2)
            if a + b:
                stubs.append((name, (a, b)))
    if not boundary:
        bname = "w"
        core.append(CoreArc(interior[0], bname, BLUE))
        boundary.append((bname, ((BLUE, FAR),)))
    return CaseSpec(tuple(core), tuple(boundary), tuple(stubs))


def test_check_case_equals_naive_and_solver_on_random_specs():
    rng = random.Random(2024)
    done = 0
    while done < 150:
        spec = random_case_spec(rng)
        try:
            spec.validate()
        except ValueError:
            continue
        done += 1
        fast = check_case(spec).extendable
        assert fast == naive_check_case(spec)
        assert fast == check_case_via_solver(spec)


def test_realize_spec_structure():
    spec = figure_case_one()
    d, fixed, free = realize_spec(spec)
    assert len(free) == 3  # the middle arc plus two stub arcs
    for arc, color in fixed.items():
        assert color in (BLUE, RED)
    assert set(free).isdisjoint(fixed)
    assert {a for a in free} | set(fixed) == set(d.arcs)


def test_claim_space_counts_are_stable():
    assert claim_raw_slots("c1") == 77760
    specs = list(itertools.islice(iter_claim_specs("c1"), 50))
    assert len(specs) == 50
    for spec in specs:
        spec.validate()


def test_unknown_claim_rejected():
    with pytest.raises(ValueError):
        claim_raw_slots("c9")


@pytest.mark.slow
def test_unicyclic_strong_bound_eight_vertices():
    # Exhaustive theorem cross-check one size past the acceptance window.
    import os

    from irrlab.sweeps import sweep
    from irrlab.irregularity import Mode

    rep = sweep(
        "unicyclic_orientations",
        8,
        Mode.STRONG,
        bound=2,
        jobs=max(2, min(8, os.cpu_count() or 2)),
        chunk_size=1 << 19,
    )
    assert rep.complete and rep.max_index <= 2
