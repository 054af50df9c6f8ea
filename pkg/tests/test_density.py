"""Areas, density bounds and feasibility certificates (all exact)."""

from __future__ import annotations

from fractions import Fraction

import pytest

from latticepack.density import (TAIL_COEFF, SequenceSpec, area_direct,
                                 area_formula, color_count_lower_bound,
                                 decimal_enclosure, density_upper_bound,
                                 feasibility_certificate)
from latticepack.lattice import Lattice

H, S, T = Lattice.HEX, Lattice.SQUARE, Lattice.TRI
Q = Fraction


@pytest.mark.parametrize("kind,k,expected", [
    (T, 1, 3), (T, 2, 7), (T, 3, 12),
    (H, 2, 4), (H, 3, 6), (H, 4, 10), (H, 1, 2),
    (S, 1, 2), (S, 2, 5), (S, 3, 8), (S, 4, 13),
])
def test_area_formula_pinned(kind, k, expected):
    assert area_formula(kind, k) == expected


def test_area_rejects_nonpositive():
    with pytest.raises(ValueError):
        area_formula(H, 0)
    with pytest.raises(ValueError):
        area_direct(T, -1)


@pytest.mark.parametrize("kind", [H, S, T])
def test_area_direct_matches_formula(kind):
    for k in range(1, 17):
        assert area_direct(kind, k) == area_formula(kind, k)


@pytest.mark.parametrize("kind", [H, S, T])
def test_area_direct_center_independent(kind):
    for center in [(3, -2), (-5, 7), (11, 4)]:
        for k in (1, 3, 6):
            assert area_direct(kind, k, center) == area_formula(kind, k)


def test_area_even_case_is_ball_size():
    from latticepack.lattice import ball_size_formula
    for kind in (H, S, T):
        assert area_direct(kind, 2) == ball_size_formula(kind, 1)


@pytest.mark.parametrize("kind", [H, S, T])
def test_area_nondecreasing(kind):
    values = [area_formula(kind, k) for k in range(1, 40)]
    assert all(a <= b for a, b in zip(values, values[1:]))


def test_density_upper_bound_pinned():
    assert density_upper_bound(H, 2) == Q(1, 4)
    assert density_upper_bound(T, 3) == Q(1, 12)
    assert density_upper_bound(S, 1) == Q(1, 2)


@pytest.mark.parametrize("kind", [H, S, T])
def test_tail_coefficient_inequality(kind):
    c = TAIL_COEFF[kind]
    for i in range(1, 10_001):
        assert area_formula(kind, i) >= c * i * i


def test_sequence_spec_validation():
    with pytest.raises(ValueError):
        SequenceSpec.explicit([3, 2])
    with pytest.raises(ValueError):
        SequenceSpec.dn(0, 2)
    spec = SequenceSpec.dn(3, 2)
    assert [spec.value(i) for i in range(1, 7)] == [3, 3, 4, 4, 5, 5]
    exp = SequenceSpec.explicit([2, 3, 3])
    assert exp.value(3) == 3
    with pytest.raises(IndexError):
        exp.value(4)


# Quoted decimal bounds for the eighteen infinite cases.
INFEASIBLE_CASES = [
    (H, 2, 1, "0.994"), (H, 5, 2, "0.955"), (H, 8, 3, "0.935"),
    (H, 11, 4, "0.925"), (H, 13, 5, "0.986"), (H, 16, 6, "0.968"),
    (S, 2, 1, "0.764"), (S, 4, 2, "0.877"), (S, 6, 3, "0.917"),
    (S, 8, 4, "0.938"), (S, 10, 5, "0.951"), (S, 12, 6, "0.959"),
    (T, 1, 1, "0.854"), (T, 3, 2, "0.755"), (T, 4, 3, "0.883"),
    (T, 5, 4, "0.966"), (T, 7, 5, "0.887"), (T, 8, 6, "0.940"),
]


@pytest.mark.parametrize("kind,d,n,quoted", INFEASIBLE_CASES)
def test_feasibility_certificates(kind, d, n, quoted):
    cert = feasibility_certificate(kind, SequenceSpec.dn(d, n), 10_000)
    assert cert.infeasible
    assert cert.total_bound < 1
    # The exact partial sum, rounded up at three decimals, stays within the
    # quoted value.
    scaled = -(-cert.partial_sum.numerator * 1000 // cert.partial_sum.denominator)
    assert Q(scaled, 1000) <= Q(quoted)


def test_feasibility_inconclusive_case():
    cert = feasibility_certificate(H, SequenceSpec.dn(2, 4), 2_000)
    assert not cert.infeasible
    assert cert.verdict == "INCONCLUSIVE"


def test_feasibility_monotone_in_horizon():
    for horizon in (200, 500, 2_000):
        small = feasibility_certificate(T, SequenceSpec.dn(1, 1), horizon)
        assert small.infeasible  # longer horizons never flip the verdict
    big = feasibility_certificate(T, SequenceSpec.dn(1, 1), 10_000)
    prev = feasibility_certificate(T, SequenceSpec.dn(1, 1), 500)
    assert big.total_bound <= prev.total_bound


def test_feasibility_explicit_sequence():
    cert = feasibility_certificate(S, SequenceSpec.explicit([2, 2, 3, 3]))
    assert cert.tail_bound == 0
    assert cert.partial_sum == 2 * Q(1, 5) + 2 * Q(1, 8)
    assert cert.infeasible  # those four colors alone cannot cover the lattice


def test_feasibility_report_prints():
    cert = feasibility_certificate(H, SequenceSpec.dn(2, 1), 10_000)
    text = cert.report()
    assert "INFEASIBLE" in text and "hex" in text


@pytest.mark.parametrize("kind,d,n,expected", [
    (H, 3, 2, 15), (S, 2, 2, 11), (T, 2, 2, 127),
    (H, 2, 2, 6), (H, 4, 2, 61), (S, 3, 2, 57), (T, 4, 4, 104),
])
def test_color_count_lower_bound(kind, d, n, expected):
    assert color_count_lower_bound(kind, SequenceSpec.dn(d, n)) == expected


def test_lower_bound_divergence_cap():
    # At (8, 3) the hexagonal density sum never reaches 1.
    with pytest.raises(RuntimeError):
        color_count_lower_bound(H, SequenceSpec.dn(8, 3), cap=2_000)


def test_decimal_enclosure_exact():
    lo, hi = decimal_enclosure(Q(1, 3), 6)
    assert lo == "0.333333" and hi == "0.333334"
    lo, hi = decimal_enclosure(Q(1, 4), 2)
    assert lo == hi == "0.25"
