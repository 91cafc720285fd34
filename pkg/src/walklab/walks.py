"""Random-walk engine: conductances, step distributions, sampling.

A walk is driven by edge conductances.  From ``u`` the walker moves to
neighbor ``x`` with probability proportional to ``c(u, x)``.  On top of
that sit two optional second-order variants (non-backtracking and the
p/q-biased walk), and two optional restart modes (per-step probability
or fixed period).  Restarts jump back to the walk's start vertex.

The per-step recipe, for step ``t >= 1``:

1. decide whether this step restarts (never at ``t = 1``; in
   probability mode never immediately after a restart; in period mode
   exactly when ``t`` is a multiple of the period),
2. on restart, move to the start vertex,
3. otherwise draw the next vertex: first-order at ``t = 1``, the
   configured second-order rule afterwards, where "previous vertex"
   always means the walker's actual position two steps back, even when
   a restart intervened.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Iterator, Union

import numpy as np

from .graphs import Graph

__all__ = [
    "Constant",
    "MDLR",
    "DegreeRule",
    "ConductanceKind",
    "Node2Vec",
    "RestartProb",
    "RestartPeriod",
    "RestartMode",
    "WalkConfig",
    "Walk",
    "conductance",
    "step_distribution_first_order",
    "step_distribution_second_order",
    "transition_matrix",
    "sample_walk",
    "iter_walk_steps",
    "enumerate_walk_distribution",
    "rng_stream",
]

ENUMERATION_GUARD = 10**7


@dataclass(frozen=True)
class Constant:
    """Unit conductance on every edge (the classic uniform walk)."""


@dataclass(frozen=True)
class MDLR:
    """Minimum-degree local rule: ``c(u, v) = 1 / min(deg(u), deg(v))``."""


@dataclass(frozen=True)
class DegreeRule:
    """Conductance from an arbitrary rule on endpoint degrees.

    ``fn`` must be symmetric in its two arguments and strictly positive;
    positivity is checked where the rule is evaluated.
    """

    fn: Callable[[int, int], float]


ConductanceKind = Union[Constant, MDLR, DegreeRule]


@dataclass(frozen=True)
class Node2Vec:
    """Return/in-out bias parameters for the second-order p/q walk."""

    p: float
    q: float

    def __post_init__(self) -> None:
        if not (self.p > 0 and self.q > 0):
            raise ValueError(f"p and q must be positive, got p={self.p}, q={self.q}")


@dataclass(frozen=True)
class RestartProb:
    """Restart with probability ``alpha`` per step (never twice in a row)."""

    alpha: float

    def __post_init__(self) -> None:
        if not 0 < self.alpha < 1:
            raise ValueError(f"alpha must be in (0, 1), got {self.alpha}")


@dataclass(frozen=True)
class RestartPeriod:
    """Restart exactly at steps ``k, 2k, 3k, ...``."""

    k: int

    def __post_init__(self) -> None:
        if self.k < 1:
            raise ValueError(f"period must be >= 1, got {self.k}")


RestartMode = Union[RestartProb, RestartPeriod]


@dataclass(frozen=True)
class WalkConfig:
    """Everything that determines a walk's law, plus the RNG seed.

    ``length`` counts steps, so a walk visits ``length + 1`` positions.
    ``non_backtracking`` and ``node2vec`` are mutually exclusive ways of
    conditioning on the previous position.
    """

    length: int
    conductance: ConductanceKind = Constant()
    non_backtracking: bool = False
    node2vec: Node2Vec | None = None
    restart: RestartMode | None = None
    seed: int | None = None

    def __post_init__(self) -> None:
        if self.length < 0:
            raise ValueError(f"length must be >= 0, got {self.length}")
        if self.non_backtracking and self.node2vec is not None:
            raise ValueError("non_backtracking and node2vec cannot be combined")
        if not isinstance(self.conductance, (Constant, MDLR, DegreeRule)):
            raise TypeError(f"unknown conductance kind: {self.conductance!r}")


@dataclass(frozen=True)
class Walk:
    """A sampled trajectory: positions and which steps were restarts.

    ``restart_flags[t]`` is True when position ``t`` was reached by a
    restart jump rather than an edge move; ``restart_flags[0]`` is
    always False.
    """

    vertices: tuple[int, ...]
    restart_flags: tuple[bool, ...]

    def __post_init__(self) -> None:
        if len(self.vertices) != len(self.restart_flags):
            raise ValueError("vertices and restart_flags must have equal length")
        if not self.vertices:
            raise ValueError("a walk has at least its start position")
        if self.restart_flags[0]:
            raise ValueError("the start position is not a restart")

    @property
    def start(self) -> int:
        return self.vertices[0]

    def __len__(self) -> int:
        return len(self.vertices)


def conductance(g: Graph, kind: ConductanceKind, u: int, v: int) -> float:
    """Conductance of the edge ``(u, v)``; the edge must exist."""
    if not g.has_edge(u, v):
        raise ValueError(f"({u}, {v}) is not an edge")
    if isinstance(kind, Constant):
        return 1.0
    if isinstance(kind, MDLR):
        return 1.0 / min(g.degree(u), g.degree(v))
    if isinstance(kind, DegreeRule):
        w = kind.fn(g.degree(u), g.degree(v))
        if not w > 0:
            raise ValueError(f"degree rule gave nonpositive weight {w} on ({u}, {v})")
        return float(w)
    raise TypeError(f"unknown conductance kind: {kind!r}")


def step_distribution_first_order(
    g: Graph, kind: ConductanceKind, u: int
) -> dict[int, float]:
    """Transition distribution out of ``u``: neighbor -> probability."""
    weights = {x: conductance(g, kind, u, x) for x in g.neighbors(u)}
    total = sum(weights.values())
    return {x: w / total for x, w in weights.items()}


def step_distribution_second_order(
    g: Graph, config: WalkConfig, prev: int | None, cur: int
) -> dict[int, float]:
    """Transition distribution out of ``cur`` given the previous position.

    ``prev is None`` means there is no history (the walk's first step)
    and the distribution is plainly first-order.  With
    ``non_backtracking`` the previous vertex is excluded and the rest
    renormalized; when it was the only neighbor the walker backtracks
    anyway (probability one).  With ``node2vec`` each candidate's
    first-order weight is scaled by 1/p, 1 or 1/q according to whether
    it is the previous vertex, adjacent to it, or neither; if the
    previous position is not a neighbor of ``cur`` (possible right
    after a restart) the step falls back to first-order, since the
    bias is defined over the configured edge move that never happened.
    """
    first = step_distribution_first_order(g, config.conductance, cur)
    if prev is None:
        return first

    if config.non_backtracking:
        trimmed = {x: w for x, w in first.items() if x != prev}
        if not trimmed:
            return {prev: 1.0}
        total = sum(trimmed.values())
        return {x: w / total for x, w in trimmed.items()}

    if config.node2vec is not None:
        if prev == cur or not g.has_edge(prev, cur):
            return first
        p, q = config.node2vec.p, config.node2vec.q
        weighted = {}
        for x, w in first.items():
            if x == prev:
                weighted[x] = w / p
            elif g.has_edge(prev, x):
                weighted[x] = w
            else:
                weighted[x] = w / q
        total = sum(weighted.values())
        return {x: w / total for x, w in weighted.items()}

    return first


def transition_matrix(g: Graph, kind: ConductanceKind) -> np.ndarray:
    """Dense first-order transition matrix: ``P[u, x]`` moves u -> x."""
    P = np.zeros((g.n, g.n))
    for u in range(g.n):
        for x, prob in step_distribution_first_order(g, kind, u).items():
            P[u, x] = prob
    return P


def rng_stream(seed: int, *key: int) -> np.random.Generator:
    """Independent Philox stream for (seed, key).

    Every sampler in the package derives its generator this way, so
    results depend only on the seed and the logical index of the thing
    being sampled, never on scheduling or thread count.
    """
    ss = np.random.SeedSequence(entropy=seed, spawn_key=key)
    return np.random.Generator(np.random.Philox(ss))


def _restart_now(config: WalkConfig, t: int, prev_was_restart: bool,
                 rng: np.random.Generator | None) -> bool:
    # Step 1 is always an ordinary move; restarts start at t = 2.
    if config.restart is None or t < 2:
        return False
    if isinstance(config.restart, RestartProb):
        if prev_was_restart:
            return False
        return bool(rng.random() < config.restart.alpha)
    return t % config.restart.k == 0


def _draw(dist: dict[int, float], rng: np.random.Generator) -> int:
    # Draw by inverting the CDF over sorted support, so the mapping from
    # uniforms to vertices is deterministic.
    u = rng.random()
    acc = 0.0
    items = sorted(dist.items())
    for x, prob in items:
        acc += prob
        if u < acc:
            return x
    return items[-1][0]


def iter_walk_steps(
    g: Graph, config: WalkConfig, start: int, rng: np.random.Generator
) -> Iterator[tuple[int, bool]]:
    """Open-ended walk: yield ``(vertex, was_restart)`` for t = 1, 2, ...

    ``config.length`` is ignored here; callers decide when to stop
    (fixed length for :func:`sample_walk`, coverage for the cover-time
    estimators).  Per step, one uniform is drawn for the restart
    decision when the mode calls for it, then one for the transition if
    the step is not a restart.
    """
    prev: int | None = None
    cur = start
    was_restart = False
    t = 0
    while True:
        t += 1
        if _restart_now(config, t, was_restart, rng):
            prev, cur = cur, start
            was_restart = True
        else:
            dist = step_distribution_second_order(
                g, config, prev if t >= 2 else None, cur
            )
            prev, cur = cur, _draw(dist, rng)
            was_restart = False
        yield cur, was_restart


def sample_walk(
    g: Graph, config: WalkConfig, start: int | None = None, walk_index: int = 0
) -> Walk:
    """Sample one walk of ``config.length`` steps.

    ``start=None`` draws the start uniformly from the vertices.  The
    generator is ``rng_stream(config.seed, walk_index)``, so a batch of
    walks indexed 0..N-1 is reproducible walk by walk.
    """
    if config.seed is None:
        raise ValueError("config.seed is required for sampling")
    rng = rng_stream(config.seed, walk_index)
    if start is None:
        start = int(rng.integers(g.n))
    elif not 0 <= start < g.n:
        raise ValueError(f"start {start} out of range for n={g.n}")

    vertices = [start]
    flags = [False]
    steps = iter_walk_steps(g, config, start, rng)
    for _ in range(config.length):
        v, was_restart = next(steps)
        vertices.append(v)
        flags.append(was_restart)
    return Walk(vertices=tuple(vertices), restart_flags=tuple(flags))


def _branching_bound(g: Graph, config: WalkConfig, n_starts: int) -> int:
    if config.length == 0:
        return n_starts
    per_step = g.max_degree()
    if isinstance(config.restart, RestartProb):
        per_step += 1
    return n_starts * g.max_degree() * per_step ** (config.length - 1)


def enumerate_walk_distribution(
    g: Graph, config: WalkConfig, start: int | None = None
) -> Iterator[tuple[Walk, float]]:
    """Exhaustively enumerate ``(walk, probability)`` pairs.

    The probabilities of the yielded walks sum to one.  ``start=None``
    averages over a uniform start.  Refuses instances whose branching
    bound exceeds ``ENUMERATION_GUARD`` sequences.
    """
    starts = list(range(g.n)) if start is None else [start]
    bound = _branching_bound(g, config, len(starts))
    if bound > ENUMERATION_GUARD:
        raise ValueError(
            f"enumeration bound {bound} exceeds guard {ENUMERATION_GUARD}"
        )
    start_prob = 1.0 / g.n if start is None else 1.0

    # One transition distribution per (prev, cur) pair serves the whole
    # tree, so cache them across branches.
    dist_cache: dict[tuple[int | None, int], list[tuple[int, float]]] = {}

    def transitions(prev: int | None, cur: int) -> list[tuple[int, float]]:
        key = (prev, cur)
        if key not in dist_cache:
            dist = step_distribution_second_order(g, config, prev, cur)
            dist_cache[key] = sorted(dist.items())
        return dist_cache[key]

    def extend(vertices: list[int], flags: list[bool], prob: float
               ) -> Iterator[tuple[Walk, float]]:
        t = len(vertices)
        if t == config.length + 1:
            yield Walk(tuple(vertices), tuple(flags)), prob
            return
        branches: list[tuple[int, bool, float]] = []
        if config.restart is not None and t >= 2:
            if isinstance(config.restart, RestartProb) and not flags[-1]:
                a = config.restart.alpha
                branches.append((vertices[0], True, a))
                stay = 1.0 - a
            elif isinstance(config.restart, RestartPeriod) and t % config.restart.k == 0:
                branches.append((vertices[0], True, 1.0))
                stay = 0.0
            else:
                stay = 1.0
        else:
            stay = 1.0
        if stay > 0:
            prev = vertices[-2] if t >= 2 else None
            branches.extend(
                (x, False, stay * q) for x, q in transitions(prev, vertices[-1])
            )
        for x, flag, q in branches:
            if q == 0:
                continue
            yield from extend(vertices + [x], flags + [flag], prob * q)

    for s in starts:
        yield from extend([s], [False], start_prob)
