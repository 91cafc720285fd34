"""Stationary distributions and the averaged-propagation identity."""
import math

import numpy as np
import pytest

from walklab import (
    Constant,
    MDLR,
    Node2Vec,
    RestartProb,
    WalkConfig,
    build_graph,
    expected_output,
    gen_barbell,
    gen_cycle,
    gen_lollipop,
    gen_path,
    jacobian_expectation,
    mc_visit_frequencies,
    mixing_suite,
    monte_carlo_visit_frequency,
    stationary,
    transition_matrix,
)


def test_stationary_uniform_walk_proportional_to_degree():
    g = gen_lollipop(4)
    pi = stationary(transition_matrix(g, Constant()))
    expect = np.array([g.degree(v) for v in range(g.n)], dtype=float) / (2 * g.m)
    np.testing.assert_allclose(pi, expect, atol=1e-9)


def test_stationary_conductance_walk_weighted_by_strength():
    # triangle with a pendant: strengths under the min-degree rule are
    # (1, 1, 2, 1), so pi = (1, 1, 2, 1) / 5
    g = build_graph([(0, 1), (1, 2), (2, 0), (2, 3)], 4)
    pi = stationary(transition_matrix(g, MDLR()))
    np.testing.assert_allclose(pi, np.array([1, 1, 2, 1]) / 5, atol=1e-9)


def test_stationary_fixed_point():
    P = transition_matrix(gen_barbell(4), Constant())
    pi = stationary(P)
    np.testing.assert_allclose(pi @ P, pi, atol=1e-9)
    assert math.isclose(pi.sum(), 1.0, abs_tol=1e-12)


@pytest.mark.parametrize("g", [gen_path(2), gen_cycle(4)])
def test_stationary_rejects_bipartite(g):
    with pytest.raises(ValueError, match="bipartite"):
        stationary(transition_matrix(g, Constant()))


def test_transition_matrix_input_checks():
    with pytest.raises(ValueError, match="square"):
        stationary(np.ones((2, 3)))
    with pytest.raises(ValueError, match="negative"):
        stationary(np.array([[1.5, -0.5], [0.5, 0.5]]))
    with pytest.raises(ValueError, match="sum"):
        stationary(np.array([[0.5, 0.4], [0.5, 0.5]]))


def test_expected_output_identity_at_zero_length():
    P = transition_matrix(gen_cycle(3), Constant())
    x = np.array([1.0, 2.0, 4.0])
    np.testing.assert_allclose(expected_output(P, x, 0), x)


def test_expected_output_one_step_average():
    P = transition_matrix(gen_cycle(3), Constant())
    x = np.array([1.0, 0.0, 0.0])
    np.testing.assert_allclose(expected_output(P, x, 1), (x + P @ x) / 2)


def test_expected_output_validation():
    P = transition_matrix(gen_cycle(3), Constant())
    with pytest.raises(ValueError):
        expected_output(P, np.zeros(4), 1)
    with pytest.raises(ValueError):
        expected_output(P, np.zeros(3), -1)


def test_jacobian_expectation_oracles():
    P = transition_matrix(build_graph([(0, 1)], 2), Constant())
    assert jacobian_expectation(P, 0, 1, 1) == pytest.approx(0.5)
    assert jacobian_expectation(P, 0, 0, 0) == 1.0
    assert jacobian_expectation(P, 0, 1, 0) == 0.0


def test_jacobian_rows_sum_to_one():
    P = transition_matrix(gen_barbell(3), Constant())
    for u in range(P.shape[0]):
        total = sum(jacobian_expectation(P, u, v, 7) for v in range(P.shape[0]))
        assert math.isclose(total, 1.0, abs_tol=1e-12)


def test_jacobian_barbell_bottleneck():
    """Influence across the bridge is far below influence within a side."""
    g = gen_barbell(5)
    P = transition_matrix(g, Constant())
    near = jacobian_expectation(P, 0, 1, 8)
    far = jacobian_expectation(P, 0, 9, 8)
    assert far < near / 5


def test_jacobian_validation():
    P = transition_matrix(gen_cycle(3), Constant())
    with pytest.raises(ValueError):
        jacobian_expectation(P, 0, 3, 1)
    with pytest.raises(ValueError):
        jacobian_expectation(P, 0, 0, -1)


def test_mc_visit_frequencies_k2_exact():
    # on an edge the trajectory is forced, so the estimate is exact
    g = build_graph([(0, 1)], 2)
    freqs = mc_visit_frequencies(g, WalkConfig(length=0, seed=3), 0, 1, trials=64)
    np.testing.assert_allclose(freqs, [0.5, 0.5])


def test_mc_visit_frequencies_match_exact_identity():
    g = gen_cycle(3)
    P = transition_matrix(g, Constant())
    trials = 40_000
    l = 2
    freqs = mc_visit_frequencies(g, WalkConfig(length=0, seed=5), 0, l, trials)
    assert math.isclose(float(freqs.sum()), 1.0, abs_tol=1e-12)
    for v in range(3):
        exact = jacobian_expectation(P, 0, v, l)
        sigma = math.sqrt(exact * (1 - exact) / (trials * (l + 1)))
        assert abs(float(freqs[v]) - exact) < 5 * sigma


def test_monte_carlo_visit_frequency_scalar_wrapper():
    g = gen_cycle(3)
    val = monte_carlo_visit_frequency(
        g, WalkConfig(length=0, seed=5), 0, 1, l=2, trials=2048
    )
    assert 0.0 < val < 1.0
    with pytest.raises(ValueError):
        monte_carlo_visit_frequency(g, WalkConfig(length=0, seed=5), 0, 9, 2, 10)


def test_mc_visit_frequencies_thread_independence():
    g = gen_lollipop(3)
    cfgd = WalkConfig(length=0, seed=9)
    a = mc_visit_frequencies(g, cfgd, 2, 11, trials=5000, threads=1)
    b = mc_visit_frequencies(g, cfgd, 2, 11, trials=5000, threads=4)
    assert np.array_equal(a, b)


def test_mc_visit_frequencies_only_plain_uniform_walks():
    g = gen_cycle(3)
    base = dict(u=0, l=2, trials=16)
    with pytest.raises(ValueError):
        mc_visit_frequencies(g, WalkConfig(length=0, seed=1, non_backtracking=True), **base)
    with pytest.raises(ValueError):
        mc_visit_frequencies(g, WalkConfig(length=0, seed=1, node2vec=Node2Vec(1, 2)), **base)
    with pytest.raises(ValueError):
        mc_visit_frequencies(g, WalkConfig(length=0, seed=1, conductance=MDLR()), **base)
    with pytest.raises(ValueError):
        mc_visit_frequencies(g, WalkConfig(length=0, seed=1, restart=RestartProb(0.2)), **base)
    with pytest.raises(ValueError):
        mc_visit_frequencies(g, WalkConfig(length=0), **base)


def test_mixing_suite_membership():
    suite = mixing_suite()
    assert [name for name, _ in suite] == [
        "triangle",
        "star-plus-edge",
        "barbell-5",
        "lollipop-4",
    ]
    # every member must admit a stationary distribution
    for _, g in suite:
        stationary(transition_matrix(g, Constant()))
