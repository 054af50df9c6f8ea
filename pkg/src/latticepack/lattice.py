"""Exact coordinate model of the hexagonal, square and triangular lattices.

All three lattices share the integer grid as vertex set.  The square lattice
is the ordinary grid.  The triangular lattice adds the two diagonal neighbor
directions (-1, 1) and (1, -1).  The hexagonal lattice is the brick-wall
subgraph of the grid: the vertical edge between (a, b) and (a, b+1) exists
exactly when a + b is odd, so in particular (0, 0) and (0, 1) are not
adjacent.

Closed-form distances are provided for each lattice, together with a BFS
oracle used by the test suite to certify them.
"""

from __future__ import annotations

from collections import deque
from enum import Enum
from typing import Iterable

Vertex = tuple[int, int]


class Lattice(Enum):
    HEX = "hex"
    SQUARE = "square"
    TRI = "tri"

    def __str__(self) -> str:  # CLI-friendly
        return self.value


DEGREE = {Lattice.HEX: 3, Lattice.SQUARE: 4, Lattice.TRI: 6}

# Growth of sphere sizes: |sphere(n)| = SPHERE_COEFF * n for n >= 1.
SPHERE_COEFF = {Lattice.HEX: 3, Lattice.SQUARE: 4, Lattice.TRI: 6}


def vertex_type(v: Vertex) -> int:
    """Bipartition class of a hexagonal-lattice vertex: (a + b + 1) mod 2."""
    return (v[0] + v[1] + 1) % 2


def distance(kind: Lattice, v1: Vertex, v2: Vertex) -> int:
    """Shortest-path distance between two vertices, by closed form."""
    da = abs(v1[0] - v2[0])
    db = abs(v1[1] - v2[1])
    if kind is Lattice.SQUARE:
        return da + db
    if kind is Lattice.TRI:
        # Deltas of mixed sign (or zero) move diagonally for free.
        if (v1[0] - v2[0]) * (v1[1] - v2[1]) <= 0:
            return max(da, db)
        return da + db
    # Hexagonal case assumes b1 >= b2; swap so it holds.
    if v1[1] < v2[1]:
        v1, v2 = v2, v1
    if da >= db:
        return da + db
    return 2 * db - vertex_type(v1) + vertex_type(v2)


def neighbors(kind: Lattice, v: Vertex) -> list[Vertex]:
    """Adjacent vertices, in a fixed deterministic order."""
    a, b = v
    if kind is Lattice.SQUARE:
        return [(a + 1, b), (a - 1, b), (a, b + 1), (a, b - 1)]
    if kind is Lattice.TRI:
        return [(a + 1, b), (a - 1, b), (a, b + 1), (a, b - 1),
                (a - 1, b + 1), (a + 1, b - 1)]
    # Brick wall: one vertical edge per vertex, up when a + b is odd.
    vertical = (a, b + 1) if (a + b) % 2 == 1 else (a, b - 1)
    return [(a + 1, b), (a - 1, b), vertical]


def ball(kind: Lattice, center: Vertex, n: int) -> set[Vertex]:
    """All vertices at distance <= n from center."""
    if n < 0:
        raise ValueError("radius must be nonnegative")
    ca, cb = center
    out = set()
    for da in range(-n, n + 1):
        for db in range(-n, n + 1):
            v = (ca + da, cb + db)
            if distance(kind, center, v) <= n:
                out.add(v)
    return out


def sphere(kind: Lattice, center: Vertex, n: int) -> set[Vertex]:
    """All vertices at distance exactly n from center."""
    if n < 0:
        raise ValueError("radius must be nonnegative")
    if n == 0:
        return {center}
    ca, cb = center
    out = set()
    for da in range(-n, n + 1):
        for db in range(-n, n + 1):
            v = (ca + da, cb + db)
            if distance(kind, center, v) == n:
                out.add(v)
    return out


def ball_size_formula(kind: Lattice, n: int) -> int:
    """|ball(n)| by closed form: (c/2)n^2 + (c/2)n + 1 with c = 3, 4, 6."""
    if n < 0:
        raise ValueError("radius must be nonnegative")
    c = SPHERE_COEFF[kind]
    return (c * n * n + c * n) // 2 + 1


def sphere_size_formula(kind: Lattice, n: int) -> int:
    if n < 0:
        raise ValueError("radius must be nonnegative")
    if n == 0:
        return 1
    return SPHERE_COEFF[kind] * n


def bfs_distances(kind: Lattice, origin: Vertex, radius: int) -> dict[Vertex, int]:
    """BFS distances from origin for every vertex within the given radius.

    The search runs inside a window padded by radius + 2 so that boundary
    truncation cannot shorten or block any geodesic.
    """
    pad = radius + 2
    lo_a, hi_a = origin[0] - pad, origin[0] + pad
    lo_b, hi_b = origin[1] - pad, origin[1] + pad
    dist = {origin: 0}
    queue = deque([origin])
    while queue:
        u = queue.popleft()
        du = dist[u]
        if du >= radius:
            continue
        for w in neighbors(kind, u):
            if lo_a <= w[0] <= hi_a and lo_b <= w[1] <= hi_b and w not in dist:
                dist[w] = du + 1
                queue.append(w)
    return dist


def vertices_in_window(a_min: int, a_max: int, b_min: int, b_max: int) -> Iterable[Vertex]:
    if a_min > a_max or b_min > b_max:
        raise ValueError("empty window")
    for a in range(a_min, a_max + 1):
        for b in range(b_min, b_max + 1):
            yield (a, b)
