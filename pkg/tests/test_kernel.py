import random

import pytest
from hypothesis import given, settings, strategies as st

from coloredcut import (
    ColoredGraph,
    Cut,
    KernelVerdict,
    augment_cut,
    claim1_bound,
    cut_colors,
    distinct_pairs_of_color,
    kernelize_colors,
    kernelize_value,
    rule_star_find,
)
from helpers import inflate_one_color, oracle_max_cut_colors, random_multigraph

RAINBOW_TRIANGLE = ColoredGraph(3, ((1, 2, 1), (2, 3, 2), (1, 3, 3)), 3)


@pytest.mark.parametrize(
    "beta,bound", [(0, 0), (1, 0), (2, 2), (3, 6), (4, 12), (7, 42)]
)
def test_removal_threshold(beta, bound):
    assert claim1_bound(beta) == bound


def test_rule_find_none_when_all_small():
    assert rule_star_find(RAINBOW_TRIANGLE) is None


def test_rule_find_smallest_dense_color():
    # p=2, threshold 2: color 2 sits on three distinct pairs
    g = ColoredGraph(4, ((1, 2, 1), (1, 3, 2), (1, 4, 2), (2, 3, 2)), 2)
    assert rule_star_find(g) == 2


def test_rule_find_ignores_parallel_duplicates():
    # three edges but only one distinct pair: not dense
    g = ColoredGraph(4, ((1, 2, 1), (1, 2, 1), (2, 1, 1), (3, 4, 2)), 2)
    assert rule_star_find(g) is None


def test_kernelize_colors_leaves_sparse_graph_alone():
    out = kernelize_colors(RAINBOW_TRIANGLE)
    assert out.verdict is KernelVerdict.REDUCED
    assert out.removed_colors == ()
    assert out.reduced_graph == RAINBOW_TRIANGLE


def test_kernelize_colors_single_color_star():
    # p=1 means threshold 0: any edge at all is too much
    g = ColoredGraph(4, ((1, 2, 1), (1, 3, 1), (1, 4, 1)), 1)
    out = kernelize_colors(g)
    assert out.removed_colors == (1,)
    assert out.reduced_graph.p == 0
    assert out.reduced_graph.n == 0  # everything became isolated and was dropped


def test_kernelize_drops_only_newly_isolated_vertices():
    # vertex 7 is isolated from the start and must survive; vertices 1 and 6
    # only touch the removed color and must go.  p=3 so the two sparse colors
    # stay under the recomputed threshold and no cascade happens.
    g = ColoredGraph(
        7,
        (
            (1, 2, 1),
            (1, 3, 1),
            (1, 4, 1),
            (1, 5, 1),
            (1, 6, 1),
            (2, 3, 1),
            (2, 4, 1),
            (2, 3, 2),
            (4, 5, 3),
        ),
        3,
    )
    assert distinct_pairs_of_color(g, 1) == 7 > claim1_bound(3)
    out = kernelize_colors(g)
    assert out.removed_colors == (1,)
    red = out.reduced_graph
    assert red.n == 5  # 2,3,4,5 renamed densely, plus the always-isolated 7
    assert out.vertex_renaming == {2: 1, 3: 2, 4: 3, 5: 4, 7: 5}
    assert out.color_renaming == {2: 1, 3: 2}
    assert red.edges == ((1, 2, 1), (3, 4, 2))


def test_kernelize_two_color_graph_cascades_to_empty():
    # after the dense color goes, the threshold for p=1 is zero, so the
    # remaining color is swept up too
    g = ColoredGraph(
        5, ((1, 2, 1), (1, 3, 1), (1, 4, 1), (2, 3, 1), (2, 4, 1), (2, 3, 2)), 2
    )
    out = kernelize_colors(g)
    assert out.removed_colors == (1, 2)
    assert out.reduced_graph.p == 0
    # vertex 5 never touched an edge, so it is the lone survivor
    assert out.vertex_renaming == {5: 1}
    assert out.reduced_graph.n == 1
    assert out.reduced_graph.edges == ()


def test_kernelize_colors_cascade():
    rng = random.Random(4)
    g = random_multigraph(rng, n_max=9, p_max=3)
    g = inflate_one_color(rng, g)
    assert g is not None
    out = kernelize_colors(g)
    # soundness: optimum splits exactly into reduced optimum plus removals
    red_opt = (
        oracle_max_cut_colors(out.reduced_graph) if out.reduced_graph.n >= 2 else 0
    )
    assert oracle_max_cut_colors(g) == red_opt + len(out.removed_colors)


def test_kernelize_value_requires_positive_k():
    with pytest.raises(ValueError):
        kernelize_value(RAINBOW_TRIANGLE, 0)


def test_kernelize_value_early_yes_at_half():
    out = kernelize_value(RAINBOW_TRIANGLE, 2)  # 2k = 4 = p + 1
    assert out.verdict is KernelVerdict.EARLY_YES
    assert out.remaining_k == 2


def test_kernelize_value_no_early_yes_above_half():
    out = kernelize_value(RAINBOW_TRIANGLE, 3)
    assert out.verdict is KernelVerdict.REDUCED
    assert out.remaining_k == 3
    assert out.reduced_graph == RAINBOW_TRIANGLE


def test_kernelize_value_k_reaches_zero_mid_run():
    # two dense colors, k=2: each removal decrements k; EarlyYes at k=0.
    # Start from p=3 so that 2k=4 < p=5 after inflation and the halfway
    # trigger cannot fire before the removals do.
    rng = random.Random(9)
    base = ColoredGraph(8, ((1, 2, 1), (3, 4, 2), (5, 6, 3)), 3)
    g = inflate_one_color(rng, base)
    g = inflate_one_color(rng, g)
    assert g is not None and g.p == 5
    out = kernelize_value(g, 2)
    assert out.verdict is KernelVerdict.EARLY_YES
    assert out.remaining_k == 0
    assert len(out.removed_colors) == 2


def test_kernel_size_bound_holds_after_reduction():
    rng = random.Random(14)
    for _ in range(120):
        g = random_multigraph(rng, n_max=10, p_max=5)
        maybe = inflate_one_color(rng, g)
        if maybe is not None and rng.random() < 0.7:
            g = maybe
        red = kernelize_colors(g).reduced_graph
        bound = claim1_bound(red.p)
        for c in range(1, red.p + 1):
            assert distinct_pairs_of_color(red, c) <= bound


def test_renamings_are_dense_and_order_preserving():
    rng = random.Random(21)
    for _ in range(60):
        g = inflate_one_color(rng, random_multigraph(rng, n_max=10, p_max=3))
        if g is None:
            continue
        out = kernelize_colors(g)
        if not out.removed_colors:
            continue
        vr, cr = out.vertex_renaming, out.color_renaming
        assert sorted(vr.values()) == list(range(1, out.reduced_graph.n + 1))
        assert sorted(cr.values()) == list(range(1, out.reduced_graph.p + 1))
        assert list(vr.values()) == sorted(vr.values())  # old order kept
        assert list(cr.values()) == sorted(cr.values())
        assert set(cr) == set(range(1, g.p + 1)) - set(out.removed_colors)


def test_augment_cut_restores_removed_colors():
    rng = random.Random(33)
    done = 0
    while done < 40:
        g = inflate_one_color(rng, random_multigraph(rng, n_max=9, p_max=3))
        if g is None:
            continue
        out = kernelize_colors(g)
        if not out.removed_colors:
            continue
        done += 1
        # start from an arbitrary cut and demand one more color per removal
        base = Cut(g.n, frozenset({1}))
        surviving = cut_colors(g, base) - set(out.removed_colors)
        repaired = augment_cut(g, out.removed_colors, base)
        crossing = cut_colors(g, repaired)
        assert set(out.removed_colors) <= crossing
        assert surviving <= crossing
        assert len(crossing) >= len(surviving) + len(out.removed_colors)


@st.composite
def multigraphs(draw):
    n = draw(st.integers(min_value=2, max_value=8))
    p = draw(st.integers(min_value=1, max_value=4))
    pair = st.tuples(
        st.integers(min_value=1, max_value=n), st.integers(min_value=1, max_value=n)
    ).filter(lambda uv: uv[0] != uv[1])
    base = [(u, v, c) for c, (u, v) in enumerate(draw(st.lists(pair, min_size=p, max_size=p)), 1)]
    extra = draw(st.lists(st.tuples(pair, st.integers(min_value=1, max_value=p)), max_size=14))
    return ColoredGraph(n, tuple(base + [(u, v, c) for (u, v), c in extra]), p)


@settings(max_examples=80)
@given(multigraphs())
def test_kernelize_colors_soundness_property(g):
    out = kernelize_colors(g)
    red = out.reduced_graph
    red_opt = oracle_max_cut_colors(red) if red.n >= 2 else 0
    assert oracle_max_cut_colors(g) == red_opt + len(out.removed_colors)


@settings(max_examples=80)
@given(multigraphs(), st.integers(min_value=1, max_value=4))
def test_kernelize_value_consistent_with_colors_route(g, k):
    k = min(k, g.p) if g.p else 1
    out = kernelize_value(g, k)
    if out.verdict is KernelVerdict.EARLY_YES:
        # the early answer promises a cut with k colors exists
        assert oracle_max_cut_colors(g) >= k
    else:
        assert out.remaining_k == k - len(out.removed_colors)
        red_opt = (
            oracle_max_cut_colors(out.reduced_graph)
            if out.reduced_graph.n >= 2
            else 0
        )
        assert (oracle_max_cut_colors(g) >= k) == (red_opt >= out.remaining_k)
