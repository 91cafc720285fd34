"""Stationary distributions and averaged-propagation identities.

The linearized view of a walk-driven network: features propagate by the
transition matrix ``P`` and the reader averages over walk positions, so
its expectation is ``(1/(l+1)) sum_t P^t x``.  The entries of the
averaged matrix power are exactly the expected visit frequencies of the
walk, which is what ``monte_carlo_visit_frequency`` estimates and the
test suite pins against the matrix computation.
"""
from __future__ import annotations

import collections
from concurrent.futures import ThreadPoolExecutor

import numpy as np

from .generators import gen_barbell, gen_cycle, gen_lollipop
from .graphs import Graph, build_graph
from .walks import Constant, WalkConfig, rng_stream

__all__ = [
    "FeatureVector",
    "StationaryDistribution",
    "stationary",
    "expected_output",
    "jacobian_expectation",
    "monte_carlo_visit_frequency",
    "mc_visit_frequencies",
    "mixing_suite",
    "POWER_TOL",
    "POWER_MAX_ITER",
]

# Type aliases: per-vertex feature vectors and probability vectors are
# plain 1-D float arrays.
FeatureVector = np.ndarray
StationaryDistribution = np.ndarray

POWER_TOL = 1e-12
POWER_MAX_ITER = 10**6


def _check_transition_matrix(P: np.ndarray) -> np.ndarray:
    P = np.asarray(P, dtype=float)
    if P.ndim != 2 or P.shape[0] != P.shape[1]:
        raise ValueError(f"transition matrix must be square, got shape {P.shape}")
    if (P < 0).any():
        raise ValueError("transition matrix has negative entries")
    if not np.allclose(P.sum(axis=1), 1.0, atol=1e-9):
        raise ValueError("transition matrix rows must sum to 1")
    return P


def _is_bipartite(P: np.ndarray) -> bool:
    # 2-color the support graph; transition support is symmetric for
    # conductance walks, but symmetrize anyway for safety
    n = P.shape[0]
    support = (P > 0) | (P > 0).T
    color = [-1] * n
    for s in range(n):
        if color[s] != -1:
            continue
        color[s] = 0
        queue = collections.deque([s])
        while queue:
            u = queue.popleft()
            for v in np.flatnonzero(support[u]):
                if color[v] == -1:
                    color[v] = 1 - color[u]
                    queue.append(int(v))
                elif color[v] == color[u]:
                    return False
    return True


def stationary(P: np.ndarray) -> StationaryDistribution:
    """Stationary distribution of ``P`` by power iteration from uniform.

    Requires an ergodic chain; a bipartite support graph is rejected
    outright (the power iteration would oscillate forever) rather than
    patched with a lazy walk.  Iterates until successive iterates agree
    to ``POWER_TOL`` in max norm.
    """
    P = _check_transition_matrix(P)
    if _is_bipartite(P):
        raise ValueError("bipartite transition support has no power-iteration limit")
    n = P.shape[0]
    pi = np.full(n, 1.0 / n)
    for _ in range(POWER_MAX_ITER):
        nxt = pi @ P
        if np.abs(nxt - pi).max() < POWER_TOL:
            return nxt
        pi = nxt
    raise RuntimeError(
        f"power iteration did not converge in {POWER_MAX_ITER} iterations"
    )


def expected_output(P: np.ndarray, x: np.ndarray, l: int) -> FeatureVector:
    """Expectation of the position-averaged reader: (1/(l+1)) sum P^t x."""
    P = _check_transition_matrix(P)
    x = np.asarray(x, dtype=float)
    if x.shape != (P.shape[0],):
        raise ValueError(f"feature vector shape {x.shape} does not match n={P.shape[0]}")
    if l < 0:
        raise ValueError(f"l must be >= 0, got {l}")
    acc = x.copy()
    cur = x
    for _ in range(l):
        cur = P @ cur
        acc += cur
    return acc / (l + 1)


def jacobian_expectation(P: np.ndarray, u: int, v: int, l: int) -> float:
    """Influence of input ``v`` on output ``u``: (1/(l+1)) [sum P^t]_{uv}.

    Equals the walk's expected visit frequency of ``v`` over positions
    0..l starting from ``u``.
    """
    P = _check_transition_matrix(P)
    n = P.shape[0]
    if not (0 <= u < n and 0 <= v < n):
        raise ValueError(f"indices ({u}, {v}) out of range for n={n}")
    if l < 0:
        raise ValueError(f"l must be >= 0, got {l}")
    row = np.zeros(n)
    row[u] = 1.0
    acc = row.copy()
    for _ in range(l):
        row = row @ P
        acc += row
    return float(acc[v] / (l + 1))


_MC_CHUNK = 1024


def mc_visit_frequencies(
    g: Graph,
    config: WalkConfig,
    u: int,
    l: int,
    trials: int,
    cell: int = 0,
    threads: int = 1,
) -> np.ndarray:
    """Empirical visit frequencies of every vertex, walks of length ``l`` from ``u``.

    Entry ``v`` is the mean over trials of (visits to v in positions
    0..l) / (l+1).  Entries sum to 1.  Only the plain uniform walk is
    supported, matching the identity this estimates; trials advance in
    lockstep chunks of 1024, chunk ``j`` on Philox stream
    ``(seed, cell, j)``, so thread count never changes the result.
    """
    if config.non_backtracking or config.node2vec is not None:
        raise ValueError("visit-frequency estimation expects a first-order walk")
    if not isinstance(config.conductance, Constant):
        raise ValueError("visit-frequency estimation expects the uniform walk")
    if config.restart is not None:
        raise ValueError("visit-frequency estimation expects no restarts")
    if config.seed is None:
        raise ValueError("config.seed is required for sampling")
    if not 0 <= u < g.n:
        raise ValueError(f"start {u} out of range for n={g.n}")
    if l < 0 or trials < 1:
        raise ValueError("need l >= 0 and trials >= 1")

    deg_max = g.max_degree()
    nbr = np.zeros((g.n, deg_max), dtype=np.int64)
    cum = np.full((g.n, deg_max), 2.0)
    for a in range(g.n):
        ns = g.neighbors(a)
        c = np.cumsum([1.0 / len(ns)] * len(ns))
        c[-1] = 1.0
        nbr[a, : len(ns)] = ns
        cum[a, : len(ns)] = c

    chunks = [
        (j, min(_MC_CHUNK, trials - j * _MC_CHUNK))
        for j in range((trials + _MC_CHUNK - 1) // _MC_CHUNK)
    ]

    def run(job: tuple[int, int]) -> np.ndarray:
        j, lanes = job
        rng = rng_stream(config.seed, cell, j)
        pos = np.full(lanes, u, dtype=np.int64)
        counts = np.zeros(g.n, dtype=np.int64)
        counts[u] = lanes
        for _ in range(l):
            draw = rng.random(lanes)
            idx = (draw[:, None] >= cum[pos]).sum(axis=1)
            pos = nbr[pos, idx]
            counts += np.bincount(pos, minlength=g.n)
        return counts

    if threads > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            results = list(pool.map(run, chunks))
    else:
        results = [run(job) for job in chunks]
    total = np.zeros(g.n, dtype=np.int64)
    for counts in results:
        total += counts
    return total / (trials * (l + 1))


def monte_carlo_visit_frequency(
    g: Graph, config: WalkConfig, u: int, v: int, l: int, trials: int
) -> float:
    """Empirical mean of (visits to ``v``)/(l+1) for walks from ``u``."""
    if not 0 <= v < g.n:
        raise ValueError(f"target {v} out of range for n={g.n}")
    return float(mc_visit_frequencies(g, config, u, l, trials)[v])


def mixing_suite() -> list[tuple[str, Graph]]:
    """The non-bipartite reference graphs the identity checks run on."""
    star_plus_edge = build_graph([(0, 1), (0, 2), (0, 3), (1, 2)], 4)
    return [
        ("triangle", gen_cycle(3)),
        ("star-plus-edge", star_plus_edge),
        ("barbell-5", gen_barbell(5)),
        ("lollipop-4", gen_lollipop(4)),
    ]
