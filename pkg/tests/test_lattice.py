"""Distance, adjacency and ball/sphere checks against the BFS oracle."""

from __future__ import annotations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from latticepack.lattice import (DEGREE, Lattice, ball, ball_size_formula,
                                 bfs_distances, distance, neighbors, sphere,
                                 sphere_size_formula, vertex_type,
                                 vertices_in_window)

KINDS = [Lattice.HEX, Lattice.SQUARE, Lattice.TRI]


def test_vertex_type_parity():
    assert vertex_type((0, 0)) == 1
    assert vertex_type((0, 1)) == 0
    assert vertex_type((2, 1)) == 0


@pytest.mark.parametrize("kind,v1,v2,expected", [
    (Lattice.HEX, (0, 0), (2, 1), 3),
    (Lattice.SQUARE, (0, 0), (3, 4), 7),
    (Lattice.TRI, (0, 0), (2, -3), 3),       # frozen from the BFS oracle
    (Lattice.HEX, (0, 0), (0, 3), 7),        # frozen from the BFS oracle
    (Lattice.HEX, (0, 0), (0, 1), 3),        # no brick-wall edge at the origin
    (Lattice.HEX, (0, 0), (0, 2), 4),
])
def test_distance_pinned(kind, v1, v2, expected):
    assert distance(kind, v1, v2) == expected
    assert distance(kind, v2, v1) == expected


@pytest.mark.parametrize("kind", KINDS)
def test_neighbors_degree_and_distance_one(kind):
    for v in [(0, 0), (1, 0), (-3, 5), (2, 2)]:
        nbrs = neighbors(kind, v)
        assert len(nbrs) == len(set(nbrs)) == DEGREE[kind]
        for w in nbrs:
            assert distance(kind, v, w) == 1
            assert v in neighbors(kind, w)


def test_neighbors_pinned():
    assert set(neighbors(Lattice.HEX, (0, 0))) == {(1, 0), (-1, 0), (0, -1)}
    assert set(neighbors(Lattice.SQUARE, (0, 0))) == {(1, 0), (-1, 0), (0, 1), (0, -1)}
    assert set(neighbors(Lattice.TRI, (0, 0))) == {
        (1, 0), (0, 1), (-1, 0), (0, -1), (-1, 1), (1, -1)}


@pytest.mark.parametrize("kind", KINDS)
def test_distance_equals_bfs_oracle(kind):
    radius = 12
    oracle = bfs_distances(kind, (0, 0), radius)
    for v, d in oracle.items():
        assert distance(kind, (0, 0), v) == d
    # Every vertex of the window is reached by BFS within the radius bound.
    for v in vertices_in_window(-6, 6, -6, 6):
        if distance(kind, (0, 0), v) <= radius:
            assert v in oracle


@settings(max_examples=150, deadline=None)
@given(kind=st.sampled_from(KINDS),
       v1=st.tuples(st.integers(-12, 12), st.integers(-12, 12)),
       v2=st.tuples(st.integers(-12, 12), st.integers(-12, 12)),
       v3=st.tuples(st.integers(-12, 12), st.integers(-12, 12)))
def test_distance_metric_axioms(kind, v1, v2, v3):
    d12 = distance(kind, v1, v2)
    assert d12 == distance(kind, v2, v1)
    assert (d12 == 0) == (v1 == v2)
    assert d12 <= distance(kind, v1, v3) + distance(kind, v3, v2)


@settings(max_examples=120, deadline=None)
@given(kind=st.sampled_from(KINDS),
       v1=st.tuples(st.integers(-8, 8), st.integers(-8, 8)),
       v2=st.tuples(st.integers(-8, 8), st.integers(-8, 8)),
       t=st.tuples(st.integers(-6, 6), st.integers(-6, 6)))
def test_translation_invariance(kind, v1, v2, t):
    """Square and triangular distances are translation invariant; the
    brick wall only under even-coordinate-sum translations (odd ones flip
    vertex types)."""
    shifted = distance(kind, (v1[0] + t[0], v1[1] + t[1]),
                       (v2[0] + t[0], v2[1] + t[1]))
    if kind is not Lattice.HEX or (t[0] + t[1]) % 2 == 0:
        assert shifted == distance(kind, v1, v2)
    else:
        assert abs(shifted - distance(kind, v1, v2)) <= 2


def test_hex_odd_translation_still_matches_bfs():
    # Regardless of parity, the closed form always equals true distance.
    oracle = bfs_distances(Lattice.HEX, (1, 0), 8)
    for v, d in oracle.items():
        assert distance(Lattice.HEX, (1, 0), v) == d


@pytest.mark.parametrize("kind", KINDS)
def test_ball_and_sphere_formulas(kind):
    for n in range(0, 31):
        assert len(sphere(kind, (0, 0), n)) == sphere_size_formula(kind, n)
        assert len(ball(kind, (0, 0), n)) == ball_size_formula(kind, n)


def test_ball_pinned_sizes():
    assert ball_size_formula(Lattice.HEX, 1) == 4
    assert ball_size_formula(Lattice.HEX, 2) == 10
    assert ball_size_formula(Lattice.SQUARE, 3) == 25
    assert ball_size_formula(Lattice.TRI, 1) == 7
    assert ball_size_formula(Lattice.TRI, 2) == 19
    assert ball(Lattice.SQUARE, (0, 0), 0) == {(0, 0)}


@pytest.mark.parametrize("kind", KINDS)
def test_ball_nesting_and_sphere_partition(kind):
    prev = set()
    seen: set = set()
    for n in range(0, 8):
        b = ball(kind, (0, 0), n)
        s = sphere(kind, (0, 0), n)
        assert prev < b
        assert not (s & seen)
        assert b == prev | s
        prev, seen = b, seen | s


def test_negative_radius_rejected():
    with pytest.raises(ValueError):
        ball(Lattice.HEX, (0, 0), -1)
    with pytest.raises(ValueError):
        ball_size_formula(Lattice.TRI, -2)


def test_empty_window_rejected():
    with pytest.raises(ValueError):
        list(vertices_in_window(1, 0, 0, 0))
