"""Cover-time estimation: global, local under restarts, and the bounds.

Two sampling paths produce cover times.  A scalar path follows
``iter_walk_steps`` one trial at a time and supports every walk
configuration, restarts included.  A vectorized path advances a whole
chunk of restart-free trials in lockstep through precomputed transition
tables; it exists because edge-cover tails on the larger lollipops make
the scalar path impractical.  Both paths implement the same chain; the
test suite cross-checks them on small graphs.

Reproducibility contract: scalar trial ``i`` uses the Philox stream
``(seed, i)``; the vectorized path carves trials into fixed chunks of
``CHUNK_TRIALS`` and chunk ``j`` of experiment cell ``c`` uses stream
``(seed, c, j)``.  Chunks are independent, so thread count never
changes any output byte.
"""
from __future__ import annotations

import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Union

import numpy as np

from .generators import gen_lollipop, gen_rook4x4, gen_shrikhande
from .graphs import Graph, local_ball
from .walks import (
    MDLR,
    Constant,
    Node2Vec,
    RestartMode,
    RestartPeriod,
    RestartProb,
    WalkConfig,
    iter_walk_steps,
    rng_stream,
    step_distribution_first_order,
    step_distribution_second_order,
)

__all__ = [
    "Fixed",
    "WorstOverStarts",
    "UniformRandom",
    "StartPolicy",
    "CoverStats",
    "RestartBound",
    "sample_cover_time",
    "estimate_cover_time",
    "batch_cover_samples",
    "local_cover_time",
    "theorem2_bound",
    "experiment_fig3",
    "experiment_sr16",
    "DEFAULT_BUDGET",
    "CHUNK_TRIALS",
]

DEFAULT_BUDGET = 10**9
CHUNK_TRIALS = 1024


@dataclass(frozen=True)
class Fixed:
    vertex: int


@dataclass(frozen=True)
class WorstOverStarts:
    """Exact scan over all starts; the reported mean is the worst one."""


@dataclass(frozen=True)
class UniformRandom:
    """Fresh uniformly random start per trial."""


StartPolicy = Union[Fixed, WorstOverStarts, UniformRandom]


@dataclass(frozen=True)
class CoverStats:
    """Monte Carlo cover-time estimate.

    ``censored`` counts trials that hit the step budget before
    covering; they are excluded from ``mean`` and ``std_err``, never
    silently averaged in.  ``mean`` is NaN when every trial censored.
    """

    mean: float
    std_err: float
    trials: int
    mode: str
    start_policy: StartPolicy
    censored: int = 0


@dataclass(frozen=True)
class RestartBound:
    """Closed-form worst-case local cover bound for restarted walks."""

    value: float
    mode: str
    max_degree: int
    radius: int
    restart: RestartMode

    def __float__(self) -> float:
        return self.value


def _check_mode(mode: str) -> None:
    # "edge" counts a traversal in either direction; "edge-strict" is the
    # textbook notion that wants both directions of every edge.
    if mode not in ("vertex", "edge", "edge-strict"):
        raise ValueError(
            f"mode must be 'vertex', 'edge' or 'edge-strict', got {mode!r}"
        )


def _require_seed(config: WalkConfig) -> int:
    if config.seed is None:
        raise ValueError("config.seed is required for sampling")
    return config.seed


# ---------------------------------------------------------------------------
# scalar path


def _edge_key(u: int, v: int) -> tuple[int, int]:
    return (u, v) if u < v else (v, u)


def _edge_targets_for(
    edges: frozenset[tuple[int, int]], mode: str
) -> frozenset[tuple[int, int]] | None:
    if mode == "edge":
        return edges
    if mode == "edge-strict":
        return frozenset((u, v) for u, v in edges) | frozenset(
            (v, u) for u, v in edges
        )
    return None


def _cover_steps_scalar(
    g: Graph,
    config: WalkConfig,
    start: int,
    rng: np.random.Generator,
    vertex_targets: frozenset[int] | None,
    edge_targets: frozenset[tuple[int, int]] | None,
    budget: int,
    directed: bool = False,
) -> tuple[int | None, int | None]:
    """Steps until each requested target set is covered (None = censored).

    Vertex targets count visits.  Edge targets count traversals; with
    ``directed`` the targets are ordered pairs and each traversal only
    covers its own direction, otherwise either direction covers the
    (sorted) pair.  Restart jumps visit their landing vertex but
    traverse no edge.
    """
    need_v = set(vertex_targets) - {start} if vertex_targets is not None else None
    need_e = set(edge_targets) if edge_targets is not None else None
    t_v: int | None = 0 if need_v is not None and not need_v else None
    t_e: int | None = 0 if need_e is not None and not need_e else None
    if not need_v and not need_e:
        return t_v, t_e

    prev = start
    t = 0
    for v, was_restart in iter_walk_steps(g, config, start, rng):
        t += 1
        if need_v and v in need_v:
            need_v.discard(v)
            if not need_v:
                t_v = t
        if need_e and not was_restart:
            key = (prev, v) if directed else _edge_key(prev, v)
            if key in need_e:
                need_e.discard(key)
                if not need_e:
                    t_e = t
        prev = v
        if not need_v and not need_e:
            break
        if t >= budget:
            break
    return t_v, t_e


def sample_cover_time(
    g: Graph,
    config: WalkConfig,
    start: int,
    mode: str,
    walk_index: int = 0,
    budget: int = DEFAULT_BUDGET,
) -> int | None:
    """One global cover-time sample; None when the budget censored it.

    Vertex mode runs until every vertex is visited, edge mode until
    every edge is traversed in at least one direction, edge-strict mode
    until both directions of every edge are traversed.  Global cover
    expects a restart-free walk (a restarted walk localizes and its
    global cover time need not even have a finite mean).
    """
    _check_mode(mode)
    if config.restart is not None:
        raise ValueError("global cover time expects a restart-free config")
    if not 0 <= start < g.n:
        raise ValueError(f"start {start} out of range for n={g.n}")
    rng = rng_stream(_require_seed(config), walk_index)
    vertex_targets = frozenset(range(g.n)) if mode == "vertex" else None
    edge_targets = _edge_targets_for(frozenset(g.edges()), mode)
    t_v, t_e = _cover_steps_scalar(
        g, config, start, rng, vertex_targets, edge_targets, budget,
        directed=(mode == "edge-strict"),
    )
    return t_v if mode == "vertex" else t_e


# ---------------------------------------------------------------------------
# vectorized path (restart-free only)


class _StepTables:
    """Cumulative transition tables for lockstep sampling.

    First-order configs walk on vertex states.  Second-order configs
    (non-backtracking or node2vec) walk on directed-edge states, with a
    first-order table for the opening step.  Rows are cumulative
    probabilities over neighbors in ascending vertex order, padded with
    2.0 so a padded slot can never be selected; the last real entry is
    forced to 1.0, mirroring the scalar draw's last-candidate fallback.
    """

    def __init__(self, g: Graph, config: WalkConfig):
        self.n = g.n
        self.m = g.m
        self.second_order = config.non_backtracking or config.node2vec is not None

        eid_of = {}
        offsets = np.zeros(g.n + 1, dtype=np.int64)
        for u in range(g.n):
            offsets[u + 1] = offsets[u] + g.degree(u)
            for i, v in enumerate(g.neighbors(u)):
                eid_of[(u, v)] = offsets[u] + i
        n_dir = int(offsets[-1])
        self.n_dir = n_dir

        ue_of = {e: i for i, e in enumerate(g.edges())}
        deg_max = g.max_degree()

        # first-order table over vertex states (also the opening step)
        self.v_next = np.zeros((g.n, deg_max), dtype=np.int64)
        self.v_cum = np.full((g.n, deg_max), 2.0)
        self.v_eid = np.zeros((g.n, deg_max), dtype=np.int64)
        self.v_ue = np.zeros((g.n, deg_max), dtype=np.int64)
        for u in range(g.n):
            dist = step_distribution_first_order(g, config.conductance, u)
            items = sorted(dist.items())
            cum = np.cumsum([p for _, p in items])
            cum[-1] = 1.0
            for i, (v, _) in enumerate(items):
                self.v_next[u, i] = v
                self.v_cum[u, i] = cum[i]
                self.v_eid[u, i] = eid_of[(u, v)]
                self.v_ue[u, i] = ue_of[_edge_key(u, v)]

        if not self.second_order:
            return

        # directed-edge states for second-order stepping
        self.e_head = np.zeros(n_dir, dtype=np.int64)
        self.e_ue = np.zeros(n_dir, dtype=np.int64)
        self.e_next = np.zeros((n_dir, deg_max), dtype=np.int64)
        self.e_cum = np.full((n_dir, deg_max), 2.0)
        for u in range(g.n):
            for v in g.neighbors(u):
                e = eid_of[(u, v)]
                self.e_head[e] = v
                self.e_ue[e] = ue_of[_edge_key(u, v)]
                dist = step_distribution_second_order(g, config, u, v)
                items = sorted(dist.items())
                cum = np.cumsum([p for _, p in items])
                cum[-1] = 1.0
                for i, (w, _) in enumerate(items):
                    self.e_next[e, i] = eid_of[(v, w)]
                    self.e_cum[e, i] = cum[i]


def _row_draw(cum_rows: np.ndarray, u: np.ndarray) -> np.ndarray:
    return (u[:, None] >= cum_rows).sum(axis=1)


def _batch_chunk(
    g: Graph,
    tables: _StepTables,
    seed: int,
    cell: int,
    chunk_index: int,
    lanes: int,
    start: int | None,
    budget: int,
    track_edges: bool,
    strict_edges: bool,
) -> tuple[np.ndarray, np.ndarray]:
    """Cover times for one chunk of lanes; -1 marks a censored lane."""
    rng = rng_stream(seed, cell, chunk_index)
    n = tables.n
    # strict edge cover tracks the 2m directed arcs, plain tracks pairs
    e_total = tables.n_dir if strict_edges else tables.m
    if start is None:
        starts = rng.integers(n, size=lanes)
    else:
        starts = np.full(lanes, start, dtype=np.int64)

    t_v = np.full(lanes, -1, dtype=np.int64)
    t_e = np.full(lanes, -1, dtype=np.int64)
    visited = np.zeros((lanes, n), dtype=bool)
    lane_idx = np.arange(lanes)
    visited[lane_idx, starts] = True
    v_count = np.ones(lanes, dtype=np.int64)
    if track_edges:
        traversed = np.zeros((lanes, e_total), dtype=bool)
        e_count = np.zeros(lanes, dtype=np.int64)

    if n == 1:
        t_v[:] = 0
        if track_edges:
            t_e[:] = 0
        return t_v, t_e

    # opening step from the start vertices
    u01 = rng.random(lanes)
    idx = _row_draw(tables.v_cum[starts], u01)
    pos = tables.v_next[starts, idx]
    state = tables.v_eid[starts, idx] if tables.second_order else pos
    newly = ~visited[lane_idx, pos]
    visited[lane_idx, pos] = True
    v_count += newly
    t_v[v_count == n] = 1
    if track_edges:
        ue = tables.v_eid[starts, idx] if strict_edges else tables.v_ue[starts, idx]
        traversed[lane_idx, ue] = True
        e_count += 1
        t_e[(e_count == e_total)] = 1

    active = (t_v < 0) | (t_e < 0 if track_edges else False)
    alive = np.flatnonzero(active)
    t = 1
    while alive.size and t < budget:
        t += 1
        u = rng.random(alive.size)
        if tables.second_order:
            rows = tables.e_cum[state[alive]]
            idx = _row_draw(rows, u)
            nxt = tables.e_next[state[alive], idx]
            w = tables.e_head[nxt]
            ue = nxt if strict_edges else tables.e_ue[nxt]
            state[alive] = nxt
        else:
            rows = tables.v_cum[state[alive]]
            idx = _row_draw(rows, u)
            w = tables.v_next[state[alive], idx]
            ue = (
                tables.v_eid[state[alive], idx]
                if strict_edges
                else tables.v_ue[state[alive], idx]
            )
            state[alive] = w

        newly = ~visited[alive, w]
        visited[alive, w] = True
        v_count[alive] += newly
        just_v = alive[(t_v[alive] < 0) & (v_count[alive] == n)]
        t_v[just_v] = t
        if track_edges:
            newe = ~traversed[alive, ue]
            traversed[alive, ue] = True
            e_count[alive] += newe
            just_e = alive[(t_e[alive] < 0) & (e_count[alive] == e_total)]
            t_e[just_e] = t
            alive = alive[(t_v[alive] < 0) | (t_e[alive] < 0)]
        else:
            alive = alive[t_v[alive] < 0]
    return t_v, t_e


def batch_cover_samples(
    g: Graph,
    config: WalkConfig,
    trials: int,
    start: int | None,
    budget: int = DEFAULT_BUDGET,
    cell: int = 0,
    threads: int = 1,
    track_edges: bool = True,
    strict_edges: bool = False,
) -> tuple[np.ndarray, np.ndarray]:
    """Paired (vertex, edge) cover-time samples from lockstep trials.

    Both times come from the same trajectory, so per-trial
    ``edge >= vertex`` holds wherever both are uncensored.  ``start``
    None draws a fresh uniform start per trial.  ``strict_edges``
    switches the edge time to the both-directions notion.  Returns
    int64 arrays of length ``trials`` with -1 for censored entries (the
    edge array is all -1 when ``track_edges`` is off).
    """
    if config.restart is not None:
        raise ValueError("the vectorized path does not support restarts")
    if trials < 1:
        raise ValueError(f"trials must be >= 1, got {trials}")
    seed = _require_seed(config)
    tables = _StepTables(g, config)
    chunks = [
        (j, min(CHUNK_TRIALS, trials - j * CHUNK_TRIALS))
        for j in range((trials + CHUNK_TRIALS - 1) // CHUNK_TRIALS)
    ]
    t_v = np.full(trials, -1, dtype=np.int64)
    t_e = np.full(trials, -1, dtype=np.int64)

    def run(job: tuple[int, int]) -> tuple[int, np.ndarray, np.ndarray]:
        j, lanes = job
        cv, ce = _batch_chunk(
            g, tables, seed, cell, j, lanes, start, budget, track_edges,
            strict_edges,
        )
        return j, cv, ce

    if threads > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            results = list(pool.map(run, chunks))
    else:
        results = [run(job) for job in chunks]
    for j, cv, ce in results:
        lo = j * CHUNK_TRIALS
        t_v[lo : lo + cv.size] = cv
        t_e[lo : lo + ce.size] = ce
    return t_v, t_e


# ---------------------------------------------------------------------------
# estimators


def _stats(
    samples: np.ndarray, mode: str, start_policy: StartPolicy
) -> CoverStats:
    trials = samples.size
    ok = samples[samples >= 0]
    censored = int(trials - ok.size)
    if ok.size == 0:
        return CoverStats(math.nan, math.nan, trials, mode, start_policy, censored)
    mean = float(ok.mean())
    std_err = float(ok.std(ddof=1) / math.sqrt(ok.size)) if ok.size > 1 else 0.0
    return CoverStats(mean, std_err, trials, mode, start_policy, censored)


def _scalar_samples(
    g: Graph,
    config: WalkConfig,
    mode: str,
    trials: int,
    start: int | None,
    budget: int,
    index_base: int = 0,
) -> np.ndarray:
    seed = _require_seed(config)
    vertex_targets = frozenset(range(g.n)) if mode == "vertex" else None
    edge_targets = _edge_targets_for(frozenset(g.edges()), mode)
    out = np.full(trials, -1, dtype=np.int64)
    for i in range(trials):
        rng = rng_stream(seed, index_base + i)
        s = int(rng.integers(g.n)) if start is None else start
        t_v, t_e = _cover_steps_scalar(
            g, config, s, rng, vertex_targets, edge_targets, budget,
            directed=(mode == "edge-strict"),
        )
        got = t_v if mode == "vertex" else t_e
        if got is not None:
            out[i] = got
    return out


def estimate_cover_time(
    g: Graph,
    config: WalkConfig,
    mode: str,
    trials: int,
    start_policy: StartPolicy,
    budget: int = DEFAULT_BUDGET,
    method: str = "auto",
    threads: int = 1,
) -> CoverStats:
    """Monte Carlo cover-time estimate under a start policy.

    ``Fixed``/``UniformRandom`` average ``trials`` samples.
    ``WorstOverStarts`` runs ``trials`` per start and reports the start
    with the largest mean; if some start ends up fully censored the
    worst case is unknown and the result is NaN.  ``method`` picks the
    sampling path: "auto" vectorizes whenever the config is
    restart-free, "scalar"/"batch" force one.
    """
    _check_mode(mode)
    if trials < 1:
        raise ValueError(f"trials must be >= 1, got {trials}")
    if config.restart is not None:
        raise ValueError("global cover time expects a restart-free config")
    if method not in ("auto", "scalar", "batch"):
        raise ValueError(f"unknown method {method!r}")
    use_batch = method in ("auto", "batch")

    def one_run(start: int | None, cell: int) -> np.ndarray:
        if use_batch:
            t_v, t_e = batch_cover_samples(
                g, config, trials, start, budget, cell=cell, threads=threads,
                track_edges=(mode != "vertex"),
                strict_edges=(mode == "edge-strict"),
            )
            return t_v if mode == "vertex" else t_e
        return _scalar_samples(
            g, config, mode, trials, start, budget, index_base=cell * trials
        )

    if isinstance(start_policy, Fixed):
        if not 0 <= start_policy.vertex < g.n:
            raise ValueError(f"start {start_policy.vertex} out of range")
        return _stats(one_run(start_policy.vertex, 0), mode, start_policy)
    if isinstance(start_policy, UniformRandom):
        return _stats(one_run(None, 0), mode, start_policy)
    if isinstance(start_policy, WorstOverStarts):
        per_start = [_stats(one_run(v, v), mode, start_policy) for v in range(g.n)]
        censored_total = sum(s.censored for s in per_start)
        if any(math.isnan(s.mean) for s in per_start):
            # a fully censored start means the worst case is unknown
            return CoverStats(
                math.nan, math.nan, trials * g.n, mode, start_policy, censored_total
            )
        worst = max(per_start, key=lambda s: s.mean)
        return CoverStats(
            worst.mean, worst.std_err, trials * g.n, mode, start_policy,
            censored_total,
        )
    raise TypeError(f"unknown start policy {start_policy!r}")


def local_cover_time(
    g: Graph,
    v: int,
    r: int,
    config: WalkConfig,
    mode: str,
    trials: int,
    budget: int = DEFAULT_BUDGET,
) -> CoverStats:
    """Cover time of the radius-``r`` ball around ``v``, walking on all of ``g``.

    The walk starts at the center and must carry a restart mode (that
    is what makes these times finite on unbounded graphs); in period
    mode the period must be at least ``r + 1``.  Vertex mode covers the
    ball's members, edge mode the edges they induce.
    """
    _check_mode(mode)
    if config.restart is None:
        raise ValueError("local cover time requires a restart mode")
    if isinstance(config.restart, RestartPeriod) and config.restart.k < r + 1:
        raise ValueError(
            f"period {config.restart.k} too short for radius {r} (need k >= r+1)"
        )
    if trials < 1:
        raise ValueError(f"trials must be >= 1, got {trials}")
    seed = _require_seed(config)
    ball = local_ball(g, v, r)
    vertex_targets = frozenset(ball.members) if mode == "vertex" else None
    edge_targets = _edge_targets_for(frozenset(ball.edges_in_parent()), mode)
    out = np.full(trials, -1, dtype=np.int64)
    for i in range(trials):
        rng = rng_stream(seed, i)
        t_v, t_e = _cover_steps_scalar(
            g, config, v, rng, vertex_targets, edge_targets, budget,
            directed=(mode == "edge-strict"),
        )
        got = t_v if mode == "vertex" else t_e
        if got is not None:
            out[i] = got
    return _stats(out, mode, Fixed(v))


def theorem2_bound(
    max_degree: int, r: int, restart: RestartMode, mode: str = "vertex"
) -> RestartBound:
    """Closed-form bound on the restarted walk's local cover time.

    Worst case over all graphs of maximum degree ``max_degree`` and all
    centers, for the radius-``r`` ball.  Probability mode accepts any
    alpha in (0, 1) (the value diverges as alpha approaches either
    end); period mode needs ``k >= r`` for vertex cover and
    ``k >= r + 1`` for edge cover, the number of steps a single
    excursion needs to reach the ball's rim (and cross its last edge).
    """
    _check_mode(mode)
    if max_degree < 2:
        raise ValueError(
            f"bound needs max_degree >= 2, got {max_degree}"
        )
    if r < 0:
        raise ValueError(f"radius must be nonnegative, got {r}")
    d = float(max_degree)
    if isinstance(restart, RestartProb):
        a = restart.alpha
        ratio = d / (1.0 - a)
        if mode == "vertex":
            per_target = (1 / a) + (1 / a) * ratio**r + (1 / a) * (1 / a - 1) * ratio ** (2 * r)
            value = 2 * (d**r - 1) * per_target
        else:
            per_target = (
                (1 / a)
                + (1 / a) * ratio ** (r + 1)
                + (1 / a) * (1 / a - 1) * ratio ** (2 * r + 1)
            )
            value = 2 * (d ** (2 * r) - 1) * per_target
    elif isinstance(restart, RestartPeriod):
        k = restart.k
        if mode == "vertex":
            if k < r:
                raise ValueError(f"period {k} < radius {r} is out of the bound's range")
            value = 2 * (d**r - 1) * (k + k * d**r)
        else:
            if k < r + 1:
                raise ValueError(
                    f"period {k} < r+1 = {r + 1} is out of the edge bound's range"
                )
            value = 2 * (d ** (2 * r) - 1) * (k + k * d ** (r + 1))
    else:
        raise TypeError(f"unknown restart mode {restart!r}")
    return RestartBound(
        value=float(value), mode=mode, max_degree=max_degree, radius=r, restart=restart
    )


# ---------------------------------------------------------------------------
# experiments


def _fmt(x: float) -> str:
    return "nan" if math.isnan(x) else f"{x:.6f}"


def _csv(rows: list[dict[str, object]]) -> str:
    header = "graph,walk,mode,mean,std_err,trials,censored"
    lines = [header]
    for row in rows:
        lines.append(
            "{graph},{walk},{mode},{mean},{std_err},{trials},{censored}".format(**row)
        )
    return "\n".join(lines) + "\n"


def _paired_rows(
    g: Graph,
    label: str,
    walk_label: str,
    config: WalkConfig,
    trials: int,
    budget: int,
    cell: int,
    threads: int,
) -> list[dict[str, object]]:
    t_v, t_e = batch_cover_samples(
        g, config, trials, start=None, budget=budget, cell=cell, threads=threads
    )
    rows = []
    for mode, samples in (("vertex", t_v), ("edge", t_e)):
        st = _stats(samples, mode, UniformRandom())
        rows.append(
            dict(
                graph=label,
                walk=walk_label,
                mode=mode,
                mean=_fmt(st.mean),
                std_err=_fmt(st.std_err),
                trials=st.trials,
                censored=st.censored,
            )
        )
    return rows


def experiment_fig3(
    seed: int,
    sizes: tuple[int, ...] = (10, 20, 40),
    trials: int = 2000,
    budget: int = 100_000,
    threads: int = 1,
) -> str:
    """Cover-time table over lollipop graphs, as CSV text.

    Walk variants: uniform and minimum-degree conductances with and
    without non-backtracking, plus the p=1, q=2 biased walk.  Starts
    are uniformly random and vertex/edge times are measured on the same
    trajectories.  The default budget censors the biased walk's hopeless
    cells (its backward drift on the lollipop handle grows
    exponentially with size) instead of hanging; censored counts land
    in the CSV.
    """
    rows: list[dict[str, object]] = []
    cell = 0
    for m in sizes:
        g = gen_lollipop(m)
        label = f"lollipop-{2 * m}"
        for walk_label, config in _fig3_variants(seed):
            rows.extend(
                _paired_rows(g, label, walk_label, config, trials, budget, cell, threads)
            )
            cell += 1
    return _csv(rows)


def _fig3_variants(seed: int) -> list[tuple[str, WalkConfig]]:
    variants: list[tuple[str, WalkConfig]] = []
    for cond_label, cond in (("uniform", Constant()), ("mdlr", MDLR())):
        for nb in (False, True):
            variants.append(
                (
                    cond_label + ("+nb" if nb else ""),
                    WalkConfig(length=0, conductance=cond,
                               non_backtracking=nb, seed=seed),
                )
            )
    # p/q rendered with a slash: the label sits in an unquoted CSV field
    variants.append(
        (
            "node2vec(1/2)",
            WalkConfig(length=0, conductance=Constant(),
                       node2vec=Node2Vec(1.0, 2.0), seed=seed),
        )
    )
    # second-order rules are exclusive, so the non-backtracking "variant"
    # of the biased walk is plain NB (on degree-2 handle vertices they
    # coincide anyway: excluding the predecessor leaves one candidate)
    variants.append(
        (
            "node2vec(1/2)+nb",
            WalkConfig(length=0, conductance=Constant(),
                       non_backtracking=True, seed=seed),
        )
    )
    return variants


def experiment_sr16(
    seed: int, trials: int = 10_000, threads: int = 1
) -> str:
    """Cover times of the two strongly regular 16-vertex graphs, as CSV.

    Walk: minimum-degree conductance with non-backtracking (on these
    6-regular graphs the conductance is degree-constant, so this is the
    non-backtracking uniform walk).  Uniformly random starts, vertex and
    edge times paired per trajectory; the summary rows average the two
    graphs' means.  The edge rows use the strict both-directions notion
    (every edge traversed each way), the quantity this experiment is
    meant to estimate.
    """
    rows: list[dict[str, object]] = []
    config = WalkConfig(
        length=0, conductance=MDLR(), non_backtracking=True, seed=seed
    )
    per_graph: dict[str, dict[str, CoverStats]] = {}
    for cell, (label, g) in enumerate(
        (("rook4x4", gen_rook4x4()), ("shrikhande", gen_shrikhande()))
    ):
        t_v, t_e = batch_cover_samples(
            g, config, trials, start=None, cell=cell, threads=threads,
            strict_edges=True,
        )
        per_graph[label] = {}
        for mode, samples in (("vertex", t_v), ("edge-strict", t_e)):
            st = _stats(samples, mode, UniformRandom())
            per_graph[label][mode] = st
            rows.append(
                dict(
                    graph=label, walk="mdlr+nb", mode=mode, mean=_fmt(st.mean),
                    std_err=_fmt(st.std_err), trials=st.trials, censored=st.censored,
                )
            )
    for mode in ("vertex", "edge-strict"):
        pair = [per_graph["rook4x4"][mode], per_graph["shrikhande"][mode]]
        mean = (pair[0].mean + pair[1].mean) / 2
        std_err = math.sqrt(pair[0].std_err**2 + pair[1].std_err**2) / 2
        rows.append(
            dict(
                graph="sr16-mean", walk="mdlr+nb", mode=mode, mean=_fmt(mean),
                std_err=_fmt(std_err), trials=pair[0].trials + pair[1].trials,
                censored=pair[0].censored + pair[1].censored,
            )
        )
    return _csv(rows)
