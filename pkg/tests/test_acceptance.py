"""Acceptance suite: one test per criterion, each printing a verdict line.

Run with ``pytest tests/test_acceptance.py -v -s`` to see the criterion
lines and timings.
"""

from __future__ import annotations

import time
from fractions import Fraction

import pytest

from latticepack.bounds import (SHARPER_LOWER, corollary_bound,
                                distance_chromatic_flags, distance_chromatic_n,
                                reproduce_tables, witness_coloring)
from latticepack.coloring import verify_grid_coloring, verify_s_coloring
from latticepack.density import (SequenceSpec, area_direct, area_formula,
                                 feasibility_certificate)
from latticepack.lattice import (Lattice, ball, ball_size_formula, bfs_distances,
                                 distance, sphere, sphere_size_formula)
from latticepack.packings import PackingSpec, verify_partition
from latticepack.pattern import pattern_pipeline
from latticepack.plans import plan_catalog
from latticepack.schemes import BASE_DENOMINATORS, BASE_PACKINGS, scheme_catalog

H, S, T = Lattice.HEX, Lattice.SQUARE, Lattice.TRI
KINDS = (H, S, T)


def report(n: int, ok: bool, budget: float, elapsed: float, detail: str) -> None:
    verdict = "PASS" if ok else "FAIL"
    print(f"\nACCEPTANCE {n}: {verdict} ({elapsed:.1f}s / budget {budget:.0f}s) - {detail}")
    assert ok, f"criterion {n}: {detail}"
    assert elapsed < budget, f"criterion {n} exceeded {budget}s ({elapsed:.1f}s)"


def test_criterion_1_distance_oracle():
    """Closed-form distance equals BFS distance on a 41x41 window."""
    t0 = time.time()
    mismatches = 0
    checked = 0
    for kind in KINDS:
        oracle = bfs_distances(kind, (0, 0), 60)
        for a in range(-20, 21):
            for b in range(-20, 21):
                checked += 1
                if distance(kind, (0, 0), (a, b)) != oracle[(a, b)]:
                    mismatches += 1
    report(1, mismatches == 0, 5.0, time.time() - t0,
           f"{checked} vertex pairs, {mismatches} mismatches")


def test_criterion_2_ball_and_area_formulas():
    t0 = time.time()
    ok = True
    for kind in KINDS:
        for n in range(1, 31):
            ok &= len(ball(kind, (0, 0), n)) == ball_size_formula(kind, n)
            ok &= len(sphere(kind, (0, 0), n)) == sphere_size_formula(kind, n)
        for k in range(1, 17):
            ok &= area_direct(kind, k) == area_formula(kind, k)
    ok &= area_formula(T, 1) == 3 and area_formula(T, 2) == 7
    report(2, ok, 10.0, time.time() - t0,
           "ball/sphere n=1..30 and direct area k=1..16 match the closed forms")


def test_criterion_3_base_packing_certificates():
    t0 = time.time()
    expected = {
        (H, 2): 3, (H, 3): 4, (H, 4): 5,
        (S, 2): 3, (S, 3): 4, (S, 4): 5,
        (T, 1): 2, (T, 2): 3, (T, 3): 4,
    }
    ok = True
    details = []
    for (kind, radius), min_dist in expected.items():
        spec = PackingSpec(kind, BASE_PACKINGS[kind][radius])
        cert = spec.min_distance()
        denom = BASE_DENOMINATORS[kind][radius]
        good = (cert.min_distance == min_dist and cert.is_packing(radius)
                and spec.density == Fraction(1, denom))
        ok &= good
        if not good:
            details.append(f"{kind.value} radius {radius}")
    report(3, ok, 5.0, time.time() - t0,
           "9 base packings reach their stated minimum distances and densities"
           + ("; failed: " + ", ".join(details) if details else ""))


def test_criterion_4_scheme_suite():
    t0 = time.time()
    failures = []
    instances = 0
    for sd in scheme_catalog():
        ms = (1, 2, 3) if sd.uses_m else (1,)
        for k in (1, 2, 3):
            for m in ms:
                dec = sd.instantiate(k, m)
                instances += 1
                if not dec.density_identity_holds():
                    failures.append((sd.name, k, m, "density"))
                    continue
                if dec.certify_radii():
                    failures.append((sd.name, k, m, "radius"))
                    continue
                if not verify_partition(dec).ok:
                    failures.append((sd.name, k, m, "partition"))
    report(4, not failures, 60.0, time.time() - t0,
           f"{instances} scheme instances (k,m in 1..3) verified"
           + (f"; failures: {failures[:3]}" if failures else ""))


EXPECTED_PLANS = {
    H: {(2, 2): 8, (2, 3): 5, (2, 4): 4,
        (3, 2): 35, (3, 3): 13, (3, 4): 10, (3, 5): 8, (3, 6): 6,
        (4, 3): 58, (4, 4): 27, (4, 5): 21, (4, 6): 18, (4, 11): 11},
    S: {(2, 2): 20, (2, 3): 8, (2, 4): 6, (2, 5): 5,
        (3, 4): 20, (3, 5): 17, (3, 6): 14, (3, 8): 8,
        (4, 4): 56, (4, 5): 34, (4, 6): 28, (4, 13): 13},
    T: {(1, 2): 6, (1, 3): 3,
        (2, 4): 16, (2, 5): 13, (2, 6): 10, (2, 7): 7,
        (3, 4): 72, (3, 5): 38, (3, 6): 26, (3, 12): 12},
}


def test_criterion_5_coloring_suite():
    t0 = time.time()
    built = {}
    failures = []
    for plan in plan_catalog():
        coloring = plan.build()        # raises if the plan fails to verify
        rep = verify_s_coloring(coloring)
        if not rep.ok:
            failures.append((plan.name, "verify"))
        built[(plan.kind, plan.d, plan.n)] = coloring.color_count
    for kind, cells in EXPECTED_PLANS.items():
        for (d, n), colors in cells.items():
            if built.get((kind, d, n)) != colors:
                failures.append((kind.value, d, n, built.get((kind, d, n)), colors))
    report(5, not failures, 300.0, time.time() - t0,
           f"{len(built)} plans built and verified with the recorded color counts"
           + (f"; failures: {failures[:4]}" if failures else ""))


def test_criterion_6_pattern_pipeline():
    t0 = time.time()
    rep1, rep2, derived = pattern_pipeline()
    ok = rep1.ok and rep2.ok and derived.color_count <= 33
    report(6, ok, 30.0, time.time() - t0,
           f"pattern verifies as (1..17); derived coloring verifies as (3,3) "
           f"with {derived.color_count} colors")


INFEASIBLE_CASES = [
    (H, 2, 1, "0.994"), (H, 5, 2, "0.955"), (H, 8, 3, "0.935"),
    (H, 11, 4, "0.925"), (H, 13, 5, "0.986"), (H, 16, 6, "0.968"),
    (S, 2, 1, "0.764"), (S, 4, 2, "0.877"), (S, 6, 3, "0.917"),
    (S, 8, 4, "0.938"), (S, 10, 5, "0.951"), (S, 12, 6, "0.959"),
    (T, 1, 1, "0.854"), (T, 3, 2, "0.755"), (T, 4, 3, "0.883"),
    (T, 5, 4, "0.966"), (T, 7, 5, "0.887"), (T, 8, 6, "0.940"),
]


def test_criterion_7_infinity_certificates():
    t0 = time.time()
    failures = []
    for kind, d, n, quoted in INFEASIBLE_CASES:
        cert = feasibility_certificate(kind, SequenceSpec.dn(d, n), 10_000)
        rounded_up = Fraction(
            -(-cert.partial_sum.numerator * 1000 // cert.partial_sum.denominator), 1000)
        if not cert.infeasible or rounded_up > Fraction(quoted):
            failures.append((kind.value, d, n))
    report(7, not failures, 30.0, time.time() - t0,
           "18 infinity certificates at horizon 10^4, partial sums within the "
           "recorded decimals" + (f"; failures: {failures}" if failures else ""))


def test_criterion_8_table_reproduction():
    t0 = time.time()
    results = reproduce_tables(10_000)
    bad = [r for r in results if not r.match]
    spot = {(r.kind, r.d, r.n): r.ours_lower for r in results}
    pinned = {(H, 3, 2): 15, (H, 4, 2): 61, (S, 2, 2): 11, (S, 3, 2): 57,
              (S, 5, 3): 199, (T, 2, 2): 127, (T, 4, 4): 104}
    pin_ok = all(spot.get(key) == v for key, v in pinned.items())
    sharper = all(
        next(r for r in results if (r.kind, r.d, r.n) == key).ours_lower == sharp
        for key, (_, sharp) in SHARPER_LOWER.items())
    ok = not bad and pin_ok and sharper
    report(8, ok, 120.0, time.time() - t0,
           f"{len(results)} cells reproduced; two recorded lower bounds "
           f"(hex d=2 n=2 and d=5 n=3) are provably weaker than the exact "
           f"density values and are surfaced as notes"
           + (f"; mismatches: {[(r.kind.value, r.d, r.n) for r in bad]}" if bad else ""))


def test_criterion_9_corollaries_and_diagonal():
    t0 = time.time()
    w1 = corollary_bound(H, [2] * 8)
    w2 = corollary_bound(H, [2, 3, 3, 5, 5, 5, 5] + [7] * 8)
    ok = (w1 is not None and w1.bound == 4 and w2 is not None and w2.bound == 15)
    for w in (w1, w2):
        coloring = witness_coloring(w)
        ok &= coloring.color_count <= w.bound
    diagonal = {
        (H, 1): 2, (H, 3): 6, (H, 4): 11,
        (S, 2): 5,
        (T, 1): 3,
    }
    for (kind, d), n in diagonal.items():
        ok &= distance_chromatic_n(kind, d) == n
    flagged = distance_chromatic_flags(H, 2)
    ok &= flagged is not None and distance_chromatic_n(H, 2) == 5
    report(9, ok, 30.0, time.time() - t0,
           "worked witnesses give bounds 4 and 15 (revalidated constructively); "
           "diagonal values match; the even-d hexagonal discrepancy at d=2 is "
           "flagged, not failed")
