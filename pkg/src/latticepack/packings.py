"""Sublattice-translate packings: enumeration, certification, partitions.

A packing candidate is the set g1*Z + g2*Z + offset for integer generator
columns g1, g2 with nonzero determinant.  Its density is 1/|det| and its
minimum pairwise distance is found by an exhaustive bounded search over
lattice vectors (sound because every lattice distance is bounded below by
the max-norm on all three lattices).

Partitions of a parent coset into child cosets are verified two ways:

* algebraically -- children lie inside the parent, are pairwise disjoint
  (offset difference outside the sum lattice), and their densities add up
  to the parent's, which for unions of cosets forces equality;
* on a finite window -- every parent vertex in a margin-shrunk window is
  covered exactly once.  The window route is the externally visible
  ``verify_partition`` report.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd

import numpy as np

from .lattice import Lattice, Vertex, distance

Vec = tuple[int, int]


def _ext_gcd(a: int, b: int) -> tuple[int, int, int]:
    """(g, x, y) with a*x + b*y = g = gcd(a, b) >= 0."""
    old_r, r = a, b
    old_s, s = 1, 0
    old_t, t = 0, 1
    while r:
        q = old_r // r
        old_r, r = r, old_r - q * r
        old_s, s = s, old_s - q * s
        old_t, t = t, old_t - q * t
    if old_r < 0:
        old_r, old_s, old_t = -old_r, -old_s, -old_t
    return old_r, old_s, old_t


def hnf_from_generators(gens: list[Vec]) -> tuple[Vec, Vec]:
    """Hermite-style basis ((a, 0), (b, c)) of the lattice spanned by gens.

    c > 0 is the gcd of the second coordinates, a > 0 generates the
    intersection with the axis b = 0, and 0 <= b < a.
    """
    gens = [g for g in gens if g != (0, 0)]
    if not gens:
        raise ValueError("no nonzero generators")
    # Combine until a single vector carries the gcd of the b-coordinates.
    wa, wb = gens[0]
    for ua, ub in gens[1:]:
        g, x, y = _ext_gcd(wb, ub)
        if g == 0:
            continue  # both already on the b = 0 axis
        wa, wb = x * wa + y * ua, g
    if wb == 0:
        raise ValueError("generators are collinear (rank < 2)")
    # Reduce all generators to the b = 0 axis; their a-steps generate the
    # intersection of the lattice with that axis.
    a_step = 0
    for ua, ub in gens:
        q = ub // wb
        if ub - q * wb != 0:
            raise AssertionError("gcd reduction failed")
        a_step = gcd(a_step, abs(ua - q * wa))
    if a_step == 0:
        raise ValueError("generators are collinear (rank < 2)")
    wa %= a_step
    return (a_step, 0), (wa, wb)


@dataclass(frozen=True)
class Sublattice:
    """Full-rank integer sublattice spanned by two generator columns."""

    g1: Vec
    g2: Vec

    def __post_init__(self) -> None:
        if self.det == 0:
            raise ValueError("generators must be linearly independent")

    @property
    def det(self) -> int:
        return self.g1[0] * self.g2[1] - self.g1[1] * self.g2[0]

    @property
    def index(self) -> int:
        """Number of cosets in Z^2 (= |det|)."""
        return abs(self.det)

    def point(self, x: int, y: int) -> Vec:
        return (x * self.g1[0] + y * self.g2[0], x * self.g1[1] + y * self.g2[1])

    def coefficients(self, v: Vec) -> tuple[int, int] | None:
        """Integer (x, y) with point(x, y) = v, or None."""
        d = self.det
        xn = v[0] * self.g2[1] - v[1] * self.g2[0]
        yn = self.g1[0] * v[1] - self.g1[1] * v[0]
        if xn % d or yn % d:
            return None
        return (xn // d, yn // d)

    def contains(self, v: Vec) -> bool:
        return self.coefficients(v) is not None

    def is_sublattice_of(self, parent: "Sublattice") -> bool:
        return parent.contains(self.g1) and parent.contains(self.g2)

    def index_in(self, parent: "Sublattice") -> int:
        if not self.is_sublattice_of(parent):
            raise ValueError("not a sublattice of the given parent")
        q, r = divmod(self.index, parent.index)
        if r:
            raise AssertionError("index is not integral")
        return q

    def hnf(self) -> tuple[Vec, Vec]:
        return hnf_from_generators([self.g1, self.g2])

    def sum_with(self, other: "Sublattice") -> "Sublattice":
        """Smallest lattice containing both (generated by all four columns)."""
        b1, b2 = hnf_from_generators([self.g1, self.g2, other.g1, other.g2])
        return Sublattice(b1, b2)

    def transversal_in(self, parent: "Sublattice") -> list[Vec]:
        """Coset representatives of self inside parent, first one (0, 0).

        Representatives are enumerated from the Hermite basis of self in
        parent coordinates, so the family is canonical and deterministic.
        """
        u1 = parent.coefficients(self.g1)
        u2 = parent.coefficients(self.g2)
        if u1 is None or u2 is None:
            raise ValueError("not a sublattice of the given parent")
        (a, _), (b, c) = hnf_from_generators([u1, u2])
        reps = []
        for j in range(c):
            for i in range(a):
                reps.append(parent.point(i, j))
        return reps

    def scaled(self, m: int) -> "Sublattice":
        return Sublattice((m * self.g1[0], m * self.g1[1]),
                          (m * self.g2[0], m * self.g2[1]))


FULL = Sublattice((1, 0), (0, 1))


def coset_min_distance(kind: Lattice, lat: Sublattice, delta: Vec = (0, 0),
                       base_types: tuple[int, ...] = (0, 1)) -> tuple[int, int]:
    """Min of distance(q, q + w + delta) over lattice vectors w and base
    vertices q, with the coefficient search bound used.

    For delta = (0, 0) the zero vector is excluded, giving the minimum
    pairwise distance within one coset.  For delta = o1 - o2 it gives the
    minimum distance between the cosets lat + o1 and lat + o2; on the
    brick-wall lattice that minimum can depend on which vertex types occur
    in the base coset, so ``base_types`` lists them (a coset holds both
    types exactly when the lattice contains an odd-coordinate-sum vector,
    which also makes the default exact for the self-distance case).

    Exhaustive: every candidate with max-norm below the running best is
    enumerated, and max(|a|, |b|) lower-bounds every distance variant.
    """
    exclude_zero = delta == (0, 0)

    def dist_at(x: int, y: int) -> int | None:
        v = (lat.g1[0] * x + lat.g2[0] * y + delta[0],
             lat.g1[1] * x + lat.g2[1] * y + delta[1])
        if exclude_zero and v == (0, 0):
            return None
        if kind is not Lattice.HEX:
            return distance(kind, (0, 0), v)
        da, db = abs(v[0]), abs(v[1])
        if da >= db:
            return da + db
        if (v[0] + v[1]) % 2 == 0:
            return 2 * db
        # Type-sensitive case: distance from a base vertex of type t is
        # 2|vb| - 1 + 2t when the difference points up, mirrored otherwise.
        if v[1] > 0:
            return min(2 * db - 1 + 2 * t for t in base_types)
        return min(2 * db + 1 - 2 * t for t in base_types)

    best = None
    for x in range(-2, 3):
        for y in range(-2, 3):
            d = dist_at(x, y)
            if d is not None and (best is None or d < best):
                best = d
    if best is None:
        raise AssertionError("no seed candidate")
    while True:
        reach = best - 1 + max(abs(delta[0]), abs(delta[1]))
        dmax = abs(lat.det)
        x_hi = (abs(lat.g2[0]) + abs(lat.g2[1])) * reach // dmax + 1
        y_hi = (abs(lat.g1[0]) + abs(lat.g1[1])) * reach // dmax + 1
        improved = False
        for x in range(-x_hi, x_hi + 1):
            for y in range(-y_hi, y_hi + 1):
                d = dist_at(x, y)
                if d is not None and d < best:
                    best = d
                    improved = True
        if not improved:
            return best, max(x_hi, y_hi)


@dataclass(frozen=True)
class PackingSpec:
    """A candidate i-packing: sublattice translate in one of the lattices."""

    kind: Lattice
    lat: Sublattice
    offset: Vec = (0, 0)

    @property
    def density(self) -> Fraction:
        return Fraction(1, self.lat.index)

    def translate(self, t: Vec) -> "PackingSpec":
        return PackingSpec(self.kind, self.lat,
                           (self.offset[0] + t[0], self.offset[1] + t[1]))

    def contains(self, v: Vertex) -> bool:
        return self.lat.contains((v[0] - self.offset[0], v[1] - self.offset[1]))

    def enumerate(self, a_min: int, a_max: int, b_min: int, b_max: int) -> set[Vertex]:
        """All packing points inside the window (inclusive bounds)."""
        if a_min > a_max or b_min > b_max:
            raise ValueError("empty window")
        out = set()
        for a in range(a_min, a_max + 1):
            for b in range(b_min, b_max + 1):
                if self.contains((a, b)):
                    out.add((a, b))
        return out

    def is_subset_of(self, parent: "PackingSpec") -> bool:
        if self.kind is not parent.kind:
            return False
        return (self.lat.is_sublattice_of(parent.lat)
                and parent.contains(self.offset))

    def disjoint_from(self, other: "PackingSpec") -> bool:
        """Exact coset disjointness: offset difference outside the sum lattice."""
        total = self.lat.sum_with(other.lat)
        delta = (self.offset[0] - other.offset[0], self.offset[1] - other.offset[1])
        return not total.contains(delta)

    def min_distance(self) -> "PackingCertificate":
        d, bound = coset_min_distance(self.kind, self.lat)
        return PackingCertificate(self, d, bound)

    def membership_mask(self, aa: np.ndarray, bb: np.ndarray) -> np.ndarray:
        """Vectorized membership test over coordinate arrays."""
        d = self.lat.det
        na = aa - self.offset[0]
        nb = bb - self.offset[1]
        xn = na * self.lat.g2[1] - nb * self.lat.g2[0]
        yn = self.lat.g1[0] * nb - self.lat.g1[1] * na
        m = abs(d)
        return ((xn % m) == 0) & ((yn % m) == 0)

    def describe(self) -> str:
        return (f"{{x*{self.lat.g1} + y*{self.lat.g2} + {self.offset}}}"
                f" in {self.kind.value}")


@dataclass(frozen=True)
class PackingCertificate:
    """Exhaustively computed minimum pairwise distance of a packing."""

    spec: PackingSpec
    min_distance: int
    search_bound: int

    def is_packing(self, radius: int) -> bool:
        return self.min_distance > radius

    def report(self) -> str:
        return (f"packing {self.spec.describe()}\n"
                f"min pairwise distance {self.min_distance} "
                f"(coefficient search bound {self.search_bound})\n"
                f"density 1/{self.spec.lat.index}")


@dataclass(frozen=True)
class Child:
    spec: PackingSpec
    radius: int  # claimed packing radius: min distance must exceed it


@dataclass(frozen=True)
class Decomposition:
    """A parent coset partitioned into child cosets with claimed radii."""

    name: str
    parent: PackingSpec
    children: tuple[Child, ...]

    def max_coordinate(self) -> int:
        coords = [abs(c) for lat in
                  [self.parent.lat.g1, self.parent.lat.g2, self.parent.offset]
                  for c in lat]
        for ch in self.children:
            coords.extend(abs(c) for v in
                          [ch.spec.lat.g1, ch.spec.lat.g2, ch.spec.offset] for c in v)
        return max(coords)

    def density_identity_holds(self) -> bool:
        return sum((c.spec.density for c in self.children), Fraction(0)) == self.parent.density

    def check_algebraic(self) -> list[str]:
        """Exact partition proof; returns a list of violations (empty = pass)."""
        problems = []
        for i, ch in enumerate(self.children):
            if not ch.spec.is_subset_of(self.parent):
                problems.append(f"child {i} is not contained in the parent coset")
        for i in range(len(self.children)):
            for j in range(i + 1, len(self.children)):
                if not self.children[i].spec.disjoint_from(self.children[j].spec):
                    problems.append(f"children {i} and {j} intersect")
        if not self.density_identity_holds():
            problems.append("child densities do not sum to the parent density")
        return problems

    def certify_radii(self) -> list[str]:
        problems = []
        for i, ch in enumerate(self.children):
            cert = ch.spec.min_distance()
            if not cert.is_packing(ch.radius):
                problems.append(
                    f"child {i} has min distance {cert.min_distance}, "
                    f"not a {ch.radius}-packing")
        return problems


@dataclass
class PartitionReport:
    ok: bool
    window: tuple[int, int, int, int]
    margin: int
    checked_vertices: int
    violations: list[str] = field(default_factory=list)

    def __str__(self) -> str:
        status = "OK" if self.ok else "FAIL"
        head = (f"partition {status}: window {self.window}, margin {self.margin}, "
                f"{self.checked_vertices} parent vertices checked")
        if self.violations:
            return head + "\n" + "\n".join("  " + v for v in self.violations)
        return head


class WindowTooSmall(ValueError):
    pass


def verify_partition(dec: Decomposition, side: int | None = None) -> PartitionReport:
    """Window check that the children tile the parent coset exactly once.

    The window is centered at the origin with the given side (default six
    times the largest generator coordinate).  Coverage is only asserted on
    the window shrunk by the decomposition's reach so truncated cosets at
    the boundary cannot produce false negatives; double-cover is asserted
    on the full window.
    """
    reach = dec.max_coordinate()
    if side is None:
        side = 6 * reach
    if side < 4 * reach:
        raise WindowTooSmall(
            f"window side {side} is below 4x the largest coordinate {reach}")
    half = side // 2
    axis = np.arange(-half, half + 1, dtype=np.int64)
    aa, bb = np.meshgrid(axis, axis, indexing="ij")
    parent_mask = dec.parent.membership_mask(aa, bb)
    cover = np.zeros_like(aa, dtype=np.int64)
    child_masks = []
    for ch in dec.children:
        m = ch.spec.membership_mask(aa, bb)
        child_masks.append(m)
        cover += m

    violations: list[str] = []
    stray = cover.astype(bool) & ~parent_mask
    if stray.any():
        i, j = np.argwhere(stray)[0]
        violations.append(f"child vertex ({aa[i, j]}, {bb[i, j]}) lies outside the parent")
    multi = cover > 1
    if multi.any():
        i, j = np.argwhere(multi)[0]
        violations.append(f"vertex ({aa[i, j]}, {bb[i, j]}) is covered "
                          f"{int(cover[i, j])} times")
    inner = (np.abs(aa) <= half - reach) & (np.abs(bb) <= half - reach)
    missed = parent_mask & inner & (cover == 0)
    if missed.any():
        i, j = np.argwhere(missed)[0]
        violations.append(f"parent vertex ({aa[i, j]}, {bb[i, j]}) is uncovered")
    checked = int((parent_mask & inner).sum())
    violations.extend(dec.check_algebraic())
    return PartitionReport(not violations, (-half, half, -half, half),
                           reach, checked, violations)


def subdivide(parent: PackingSpec, child_lat: Sublattice, radius: int,
              name: str = "") -> Decomposition:
    """Partition a parent coset into all cosets of a sublattice of it."""
    reps = child_lat.transversal_in(parent.lat)
    children = tuple(
        Child(PackingSpec(parent.kind, child_lat,
                          (parent.offset[0] + t[0], parent.offset[1] + t[1])),
              radius)
        for t in reps)
    return Decomposition(name or "subdivision", parent, children)


def mixed_decomposition(name: str, parent: PackingSpec,
                        groups: list[tuple[Sublattice, list[Vec], int]]) -> Decomposition:
    """Heterogeneous partition: (lattice, offsets relative to parent, radius) groups."""
    children = []
    for lat, offsets, radius in groups:
        for t in offsets:
            children.append(Child(
                PackingSpec(parent.kind, lat,
                            (parent.offset[0] + t[0], parent.offset[1] + t[1])),
                radius))
    return Decomposition(name, parent, tuple(children))
