"""Cover-time sampling, the restart bound, and the CSV experiments."""
import math

import numpy as np
import pytest

from walklab import (
    CHUNK_TRIALS,
    Constant,
    Fixed,
    MDLR,
    RestartPeriod,
    RestartProb,
    UniformRandom,
    WalkConfig,
    WorstOverStarts,
    batch_cover_samples,
    estimate_cover_time,
    experiment_fig3,
    experiment_sr16,
    gen_clique,
    gen_cycle,
    gen_lollipop,
    gen_path,
    local_cover_time,
    sample_cover_time,
    theorem2_bound,
)


def cfg(seed=1, **kw):
    return WalkConfig(length=0, seed=seed, **kw)


# -- exact single-sample oracles ---------------------------------------------


def test_k2_vertex_cover_is_one_step():
    g = gen_clique(2)
    for i in range(20):
        assert sample_cover_time(g, cfg(), 0, "vertex", walk_index=i) == 1


def test_k2_edge_cover_one_direction_vs_strict():
    g = gen_clique(2)
    for i in range(20):
        assert sample_cover_time(g, cfg(), 0, "edge", walk_index=i) == 1
        assert sample_cover_time(g, cfg(), 0, "edge-strict", walk_index=i) == 2


def test_triangle_nb_vertex_cover_is_two_steps():
    """Non-backtracking on a triangle must see the third vertex at t=2."""
    g = gen_cycle(3)
    c = cfg(non_backtracking=True)
    for i in range(20):
        assert sample_cover_time(g, c, 1, "vertex", walk_index=i) == 2


def test_sample_cover_time_validation():
    g = gen_clique(2)
    with pytest.raises(ValueError):
        sample_cover_time(g, cfg(), 0, "edges")
    with pytest.raises(ValueError):
        sample_cover_time(g, cfg(), 5, "vertex")
    with pytest.raises(ValueError):
        sample_cover_time(g, cfg(restart=RestartProb(0.3)), 0, "vertex")
    with pytest.raises(ValueError):
        sample_cover_time(g, WalkConfig(length=0), 0, "vertex")


def test_cover_time_lower_bounds():
    g = gen_lollipop(3)
    for i in range(10):
        t_v = sample_cover_time(g, cfg(), 0, "vertex", walk_index=i)
        t_e = sample_cover_time(g, cfg(), 0, "edge", walk_index=i)
        t_s = sample_cover_time(g, cfg(), 0, "edge-strict", walk_index=i)
        assert t_v >= g.n - 1
        assert t_e >= g.m
        assert t_s >= 2 * g.m


# -- estimators ----------------------------------------------------------------


def test_estimate_p2_worst_over_starts_is_deterministic():
    stats = estimate_cover_time(gen_path(2), cfg(), "vertex", 50, WorstOverStarts())
    assert stats.mean == 1.0
    assert stats.std_err == 0.0
    assert stats.trials == 100  # 50 per start
    assert stats.censored == 0


def test_estimate_scalar_and_batch_agree():
    g = gen_cycle(3)
    a = estimate_cover_time(g, cfg(), "vertex", 4000, Fixed(0), method="scalar")
    b = estimate_cover_time(g, cfg(), "vertex", 4000, Fixed(0), method="batch")
    # independent streams, so agreement is statistical
    gap = abs(a.mean - b.mean)
    assert gap < 6 * math.hypot(a.std_err, b.std_err)


def test_estimate_validation():
    g = gen_cycle(3)
    with pytest.raises(ValueError):
        estimate_cover_time(g, cfg(), "vertex", 0, Fixed(0))
    with pytest.raises(ValueError):
        estimate_cover_time(g, cfg(), "vertex", 5, Fixed(9))
    with pytest.raises(ValueError):
        estimate_cover_time(g, cfg(restart=RestartProb(0.2)), "vertex", 5, Fixed(0))
    with pytest.raises(ValueError):
        estimate_cover_time(g, cfg(), "vertex", 5, Fixed(0), method="vectorized")


def test_censoring_reported_not_averaged():
    stats = estimate_cover_time(gen_path(4), cfg(), "vertex", 64, Fixed(0), budget=1)
    assert stats.censored == 64
    assert math.isnan(stats.mean) and math.isnan(stats.std_err)
    # worst-over-starts propagates the unknown
    worst = estimate_cover_time(
        gen_path(4), cfg(), "vertex", 8, WorstOverStarts(), budget=1
    )
    assert math.isnan(worst.mean)


def test_batch_cover_samples_are_paired():
    g = gen_lollipop(3)
    t_v, t_e = batch_cover_samples(g, cfg(), 3000, start=None)
    assert t_v.size == t_e.size == 3000
    ok = (t_v >= 0) & (t_e >= 0)
    assert ok.all()
    assert (t_e[ok] >= t_v[ok]).all()


def test_strict_edges_dominate_plain_per_trajectory():
    # scalar trial i replays stream (seed, i), so the strict time extends
    # the exact same walk the plain time stopped on
    g = gen_cycle(4)
    for i in range(200):
        plain = sample_cover_time(g, cfg(), 0, "edge", walk_index=i)
        strict = sample_cover_time(g, cfg(), 0, "edge-strict", walk_index=i)
        assert strict >= plain


def test_batch_strict_edges_shift_the_mean():
    g = gen_cycle(4)
    _, plain = batch_cover_samples(g, cfg(), 4000, start=0)
    _, strict = batch_cover_samples(g, cfg(), 4000, start=0, strict_edges=True)
    # separate lockstep runs share no per-trial coupling; compare means
    assert strict.mean() > plain.mean() + 1.0


def test_batch_track_edges_off():
    t_v, t_e = batch_cover_samples(gen_cycle(3), cfg(), 10, start=0, track_edges=False)
    assert (t_v >= 0).all()
    assert (t_e == -1).all()


def test_batch_rejects_restarts_and_bad_trials():
    g = gen_cycle(3)
    with pytest.raises(ValueError):
        batch_cover_samples(g, cfg(restart=RestartPeriod(2)), 5, start=0)
    with pytest.raises(ValueError):
        batch_cover_samples(g, cfg(), 0, start=0)


def test_batch_thread_count_does_not_change_samples():
    g = gen_lollipop(3)
    trials = 3 * CHUNK_TRIALS + 17
    a = batch_cover_samples(g, cfg(conductance=MDLR()), trials, start=None, threads=1)
    b = batch_cover_samples(g, cfg(conductance=MDLR()), trials, start=None, threads=4)
    assert np.array_equal(a[0], b[0]) and np.array_equal(a[1], b[1])


def test_batch_second_order_matches_scalar_law():
    """Vectorized NB sampling agrees with the scalar walker's estimate."""
    g = gen_lollipop(3)
    c = cfg(non_backtracking=True)
    batch = estimate_cover_time(g, c, "vertex", 4000, Fixed(0), method="batch")
    scalar = estimate_cover_time(g, c, "vertex", 4000, Fixed(0), method="scalar")
    assert abs(batch.mean - scalar.mean) < 6 * math.hypot(
        batch.std_err, scalar.std_err
    )


# -- local cover and the closed-form bound -------------------------------------


def test_local_cover_radius_zero_is_free():
    g = gen_path(9)
    stats = local_cover_time(g, 4, 0, cfg(restart=RestartProb(0.5)), "vertex", 32)
    assert stats.mean == 0.0 and stats.std_err == 0.0


def test_local_cover_requires_restart():
    with pytest.raises(ValueError, match="restart"):
        local_cover_time(gen_path(9), 4, 1, cfg(), "vertex", 8)


def test_local_cover_period_must_reach_rim():
    g = gen_path(9)
    with pytest.raises(ValueError, match="too short"):
        local_cover_time(g, 4, 2, cfg(restart=RestartPeriod(2)), "vertex", 8)
    local_cover_time(g, 4, 2, cfg(restart=RestartPeriod(3)), "vertex", 8)


def test_local_cover_mean_respects_bound():
    g = gen_path(41)
    restart = RestartProb(0.5)
    stats = local_cover_time(g, 20, 1, cfg(restart=restart), "vertex", 4000)
    bound = theorem2_bound(g.max_degree(), 1, restart, "vertex")
    assert stats.censored == 0
    assert stats.mean + 3 * stats.std_err <= bound.value


def test_theorem2_bound_pinned_value():
    b = theorem2_bound(2, 1, RestartProb(0.5), "vertex")
    assert b.value == 84.0
    assert float(b) == 84.0
    assert (b.mode, b.max_degree, b.radius) == ("vertex", 2, 1)


def test_theorem2_bound_monotone_in_degree_and_radius():
    r = RestartProb(0.5)
    assert theorem2_bound(3, 1, r).value > theorem2_bound(2, 1, r).value
    assert theorem2_bound(2, 2, r).value > theorem2_bound(2, 1, r).value
    assert (
        theorem2_bound(2, 1, r, "edge").value > theorem2_bound(2, 1, r, "vertex").value
    )


def test_theorem2_bound_period_reach():
    # one excursion must reach the rim (vertex) or cross its last edge
    theorem2_bound(2, 1, RestartPeriod(1), "vertex")
    with pytest.raises(ValueError):
        theorem2_bound(2, 1, RestartPeriod(1), "edge")
    theorem2_bound(2, 1, RestartPeriod(2), "edge")


def test_theorem2_bound_validation():
    with pytest.raises(ValueError):
        theorem2_bound(1, 1, RestartProb(0.5))
    with pytest.raises(ValueError):
        theorem2_bound(2, -1, RestartProb(0.5))
    with pytest.raises(ValueError):
        theorem2_bound(2, 1, RestartProb(0.5), "edges")


# -- CSV experiments -----------------------------------------------------------


def test_experiment_sr16_shape_and_determinism():
    a = experiment_sr16(7, trials=CHUNK_TRIALS + 5, threads=1)
    b = experiment_sr16(7, trials=CHUNK_TRIALS + 5, threads=3)
    assert a == b
    lines = a.strip().splitlines()
    assert lines[0] == "graph,walk,mode,mean,std_err,trials,censored"
    assert len(lines) == 7
    graphs = [ln.split(",")[0] for ln in lines[1:]]
    assert graphs == [
        "rook4x4",
        "rook4x4",
        "shrikhande",
        "shrikhande",
        "sr16-mean",
        "sr16-mean",
    ]
    modes = {ln.split(",")[2] for ln in lines[1:]}
    assert modes == {"vertex", "edge-strict"}


def test_experiment_sr16_seed_changes_output():
    assert experiment_sr16(7, trials=64) != experiment_sr16(8, trials=64)


def test_experiment_fig3_shape_and_determinism():
    kw = dict(sizes=(2, 3), trials=96, budget=20_000)
    a = experiment_fig3(5, threads=1, **kw)
    b = experiment_fig3(5, threads=4, **kw)
    assert a == b
    lines = a.strip().splitlines()
    assert lines[0] == "graph,walk,mode,mean,std_err,trials,censored"
    # 2 sizes x 6 walk variants x 2 cover modes
    assert len(lines) == 1 + 2 * 6 * 2
    walks = {ln.split(",")[1] for ln in lines[1:]}
    assert walks == {
        "uniform",
        "uniform+nb",
        "mdlr",
        "mdlr+nb",
        "node2vec(1/2)",
        "node2vec(1/2)+nb",
    }
    for ln in lines[1:]:
        cols = ln.split(",")
        assert len(cols) == 7
        assert cols[2] in ("vertex", "edge")
        assert int(cols[5]) == 96
