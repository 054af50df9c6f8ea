"""Corollary witnesses, distance-chromatic forms and the table machinery."""

from __future__ import annotations

from math import ceil

import pytest

from latticepack.bounds import (SHARPER_LOWER, corollary_bound,
                                distance_chromatic_flags, distance_chromatic_n,
                                reproduce_tables, tables_csv, tables_text,
                                witness_coloring)
from latticepack.density import area_formula
from latticepack.lattice import Lattice

H, S, T = Lattice.HEX, Lattice.SQUARE, Lattice.TRI


def test_corollary_constant_two_hex():
    w = corollary_bound(H, [2] * 8)
    assert w is not None
    assert w.bound == 4
    assert w.indices == (2, 3, 4)


def test_corollary_worked_example_hex():
    prefix = [2, 3, 3, 5, 5, 5, 5] + [7] * 8 + [9] * 10
    w = corollary_bound(H, prefix)
    assert w is not None
    assert w.bound == 15
    assert w.indices == (3, 7, 15)


def test_corollary_inapplicable():
    with pytest.raises(ValueError, match="first value"):
        corollary_bound(T, [2, 2, 2])
    with pytest.raises(ValueError, match="nondecreasing"):
        corollary_bound(H, [2, 5, 3])


def test_corollary_no_witness():
    assert corollary_bound(H, [2, 2, 2]) is None


def test_corollary_square_and_tri():
    w = corollary_bound(S, [2] * 6)
    assert w is not None and w.bound == 5
    w = corollary_bound(T, [1] * 4)
    assert w is not None and w.bound == 3


@pytest.mark.parametrize("kind,prefix", [
    (H, [2] * 8),
    (H, [2, 3, 3, 5, 5, 5, 5] + [7] * 8),
    (S, [2] * 8),
    (T, [1] * 6),
])
def test_witness_revalidated_constructively(kind, prefix):
    w = corollary_bound(kind, prefix)
    assert w is not None
    coloring = witness_coloring(w)
    assert coloring.color_count <= w.bound


@pytest.mark.parametrize("kind,d,expected", [
    (H, 1, 2), (H, 3, 6), (H, 4, 11),
    (S, 1, 2), (S, 2, 5), (S, 3, 8), (S, 4, 13),
    (T, 1, 3), (T, 2, 7), (T, 3, 12),
])
def test_distance_chromatic_pinned(kind, d, expected):
    assert distance_chromatic_n(kind, d) == expected


def test_distance_chromatic_flagged_discrepancy():
    # The printed even-d hexagonal form evaluates to 5 at d = 2 although a
    # four-copy partition exists; reported, not silently resolved.
    assert distance_chromatic_n(H, 2) == 5
    assert distance_chromatic_flags(H, 2) is not None
    assert distance_chromatic_flags(H, 3) is None
    assert distance_chromatic_flags(S, 2) is None


@pytest.mark.parametrize("kind", [H, S, T])
def test_distance_chromatic_consistent_with_density(kind):
    for d in range(1, 11):
        n = distance_chromatic_n(kind, d)
        assert n >= ceil(area_formula(kind, d))


def test_reproduce_tables_all_match():
    results = reproduce_tables()
    assert len(results) == 150
    bad = [r for r in results if not r.match]
    assert bad == [], [(r.kind.value, r.d, r.n) for r in bad]


def test_tables_sharper_lower_bounds_documented():
    results = reproduce_tables()
    for (kind, d, n), (recorded, sharp) in SHARPER_LOWER.items():
        cell = next(r for r in results if r.kind is kind and r.d == d and r.n == n)
        assert cell.recorded.lower == recorded
        assert cell.ours_lower == sharp
        assert cell.ours_lower > recorded


def test_tables_infinite_cells_certified():
    results = reproduce_tables()
    inf_cells = [r for r in results if r.recorded.status == "inf"]
    assert len(inf_cells) > 50
    assert all(r.ours_status == "inf" for r in inf_cells)
    # The externally recorded infinite cell is also density-certified.
    tri11 = next(r for r in results if r.kind is T and r.d == 1 and r.n == 1)
    assert tri11.recorded.cite == "FIN2010" and tri11.ours_status == "inf"
    assert "density" in tri11.provenance


def test_tables_text_and_csv():
    results = reproduce_tables()
    text = tables_text(results)
    assert "mismatches: 0" in text
    assert "NOTE" in text  # the two sharper lower bounds are surfaced
    csv = tables_csv(results)
    lines = csv.strip().splitlines()
    assert lines[0].startswith("lattice,d,n,")
    assert len(lines) == 151
