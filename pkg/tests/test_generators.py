"""Graph family generators, including the strongly regular pair."""
import itertools

import pytest

from walklab import (
    gen_barbell,
    gen_clique,
    gen_csl,
    gen_cycle,
    gen_lollipop,
    gen_path,
    gen_rook4x4,
    gen_shrikhande,
    gen_star,
    is_isomorphic,
)


def test_path():
    g = gen_path(5)
    assert (g.n, g.m) == (5, 4)
    assert g.degree(0) == g.degree(4) == 1
    assert all(g.degree(v) == 2 for v in (1, 2, 3))


def test_cycle():
    g = gen_cycle(6)
    assert (g.n, g.m) == (6, 6)
    assert all(g.degree(v) == 2 for v in range(6))


def test_clique():
    g = gen_clique(5)
    assert (g.n, g.m) == (5, 10)
    assert all(g.degree(v) == 4 for v in range(5))


def test_star():
    g = gen_star(4)
    assert (g.n, g.m) == (5, 4)
    assert g.degree(0) == 4
    assert all(g.degree(v) == 1 for v in range(1, 5))


def test_lollipop():
    m = 4
    g = gen_lollipop(m)
    assert g.n == 2 * m
    assert g.m == m * (m - 1) // 2 + m
    assert g.has_edge(m - 1, m)
    assert g.degree(m - 1) == m  # clique plus the handle
    assert g.degree(2 * m - 1) == 1


def test_barbell():
    k = 4
    g = gen_barbell(k)
    assert g.n == 2 * k
    assert g.m == k * (k - 1) + 1
    assert g.has_edge(k - 1, k)
    assert g.degree(0) == k - 1
    assert g.degree(k - 1) == k


def test_csl_regular():
    g = gen_csl(9, 2)
    assert (g.n, g.m) == (9, 18)
    assert all(g.degree(v) == 4 for v in range(9))


@pytest.mark.parametrize(
    "fn,arg",
    [
        (gen_path, 1),
        (gen_cycle, 2),
        (gen_clique, 1),
        (gen_star, 0),
        (gen_lollipop, 1),
        (gen_barbell, 1),
    ],
)
def test_generators_reject_degenerate_sizes(fn, arg):
    with pytest.raises(ValueError):
        fn(arg)


def test_csl_rejects_bad_skip():
    with pytest.raises(ValueError):
        gen_csl(9, 1)
    with pytest.raises(ValueError):
        gen_csl(8, 4)
    with pytest.raises(ValueError):
        gen_csl(4, 2)


def _common_neighbor_counts(g):
    lam, mu = set(), set()
    for u in range(g.n):
        for v in range(u + 1, g.n):
            shared = len(set(g.neighbors(u)) & set(g.neighbors(v)))
            (lam if g.has_edge(u, v) else mu).add(shared)
    return lam, mu


@pytest.mark.parametrize("fn", [gen_rook4x4, gen_shrikhande])
def test_srg_16_6_2_2_parameters(fn):
    """Both 16-vertex graphs are strongly regular with lambda = mu = 2."""
    g = fn()
    assert (g.n, g.m) == (16, 48)
    assert all(g.degree(v) == 6 for v in range(16))
    assert _common_neighbor_counts(g) == ({2}, {2})


def _count_4_cliques(g):
    return sum(
        1
        for quad in itertools.combinations(range(g.n), 4)
        if all(g.has_edge(a, b) for a, b in itertools.combinations(quad, 2))
    )


def test_srg_pair_distinguished_by_cliques():
    # the rook's graph has a 4-clique per row and per column; the other
    # member of the parameter family has none
    assert _count_4_cliques(gen_rook4x4()) == 8
    assert _count_4_cliques(gen_shrikhande()) == 0


def test_srg_pair_not_isomorphic():
    assert not is_isomorphic(gen_rook4x4(), gen_shrikhande())
