"""Standard graph families used throughout the experiments."""
from __future__ import annotations

from .graphs import Graph, build_graph

__all__ = [
    "gen_path",
    "gen_cycle",
    "gen_clique",
    "gen_star",
    "gen_lollipop",
    "gen_barbell",
    "gen_csl",
    "gen_rook4x4",
    "gen_shrikhande",
]


def gen_path(n: int) -> Graph:
    """Path on ``n`` vertices, ``0 - 1 - ... - (n-1)``."""
    if n < 2:
        raise ValueError(f"path needs n >= 2, got {n}")
    return build_graph([(i, i + 1) for i in range(n - 1)], n)


def gen_cycle(n: int) -> Graph:
    if n < 3:
        raise ValueError(f"cycle needs n >= 3, got {n}")
    return build_graph([(i, (i + 1) % n) for i in range(n)], n)


def gen_clique(k: int) -> Graph:
    if k < 2:
        raise ValueError(f"clique needs k >= 2, got {k}")
    return build_graph([(i, j) for i in range(k) for j in range(i + 1, k)], k)


def gen_star(k: int) -> Graph:
    """Star with center ``0`` and leaves ``1..k``."""
    if k < 1:
        raise ValueError(f"star needs k >= 1 leaves, got {k}")
    return build_graph([(0, i) for i in range(1, k + 1)], k + 1)


def gen_lollipop(m: int) -> Graph:
    """Clique on ``0..m-1`` plus a path on ``m..2m-1``, joined at ``(m-1, m)``.

    2m vertices and ``m(m-1)/2 + m`` edges.
    """
    if m < 2:
        raise ValueError(f"lollipop needs m >= 2, got {m}")
    edges = [(i, j) for i in range(m) for j in range(i + 1, m)]
    edges.append((m - 1, m))
    edges.extend((i, i + 1) for i in range(m, 2 * m - 1))
    return build_graph(edges, 2 * m)


def gen_barbell(k: int) -> Graph:
    """Two ``k``-cliques, ``0..k-1`` and ``k..2k-1``, bridged by ``(k-1, k)``."""
    if k < 2:
        raise ValueError(f"barbell needs k >= 2, got {k}")
    edges = [(i, j) for i in range(k) for j in range(i + 1, k)]
    edges.extend((k + i, k + j) for i in range(k) for j in range(i + 1, k))
    edges.append((k - 1, k))
    return build_graph(edges, 2 * k)


def gen_csl(n: int, s: int) -> Graph:
    """Cycle on ``n`` vertices with skip links ``(i, (i+s) mod n)``.

    4-regular with ``2n`` edges.  Requires ``n >= 5`` and ``2 <= s < n/2``
    so the skip links neither coincide with cycle edges nor pair up with
    themselves.
    """
    if n < 5:
        raise ValueError(f"csl needs n >= 5, got {n}")
    if not 2 <= s < n / 2:
        raise ValueError(f"csl skip must satisfy 2 <= s < n/2, got s={s}, n={n}")
    edges = [(i, (i + 1) % n) for i in range(n)]
    edges.extend((i, (i + s) % n) for i in range(n))
    return build_graph(edges, n)


def gen_rook4x4() -> Graph:
    """4x4 rook's graph: cell ``(i, j)`` is vertex ``4i + j``.

    Two cells are adjacent when they share a row or a column, so the
    graph is 6-regular on 16 vertices with 48 edges.
    """
    edges = []
    for i in range(4):
        for j in range(4):
            u = 4 * i + j
            for jj in range(j + 1, 4):
                edges.append((u, 4 * i + jj))
            for ii in range(i + 1, 4):
                edges.append((u, 4 * ii + j))
    return build_graph(edges, 16)


def gen_shrikhande() -> Graph:
    """Cayley graph on Z4 x Z4 with connections ±(1,0), ±(0,1), ±(1,1).

    Same parameters as the 4x4 rook's graph (16 vertices, 6-regular,
    strongly regular (16, 6, 2, 2)) but not isomorphic to it: its
    largest clique is a triangle, while the rook's graph has 4-cliques.
    """
    offsets = [(1, 0), (-1, 0), (0, 1), (0, -1), (1, 1), (-1, -1)]
    edges = []
    for a in range(4):
        for b in range(4):
            u = 4 * a + b
            for da, db in offsets:
                v = 4 * ((a + da) % 4) + ((b + db) % 4)
                if u < v:
                    edges.append((u, v))
    return build_graph(edges, 16)
