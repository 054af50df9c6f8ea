"""Exact-rational density machinery for lattice packings.

The area of a radius-k packing vertex (the share of the lattice it excludes)
has a closed form per lattice; its reciprocal bounds the packing density.
Summing reciprocals over a color sequence gives two certified directions:

* if a finite prefix of the sequence already has reciprocal-area sum >= 1,
  no coloring can use fewer colors (``color_count_lower_bound``);
* if the full infinite sum stays below 1, no coloring exists at all and the
  chromatic number is infinite (``feasibility_certificate``).

Everything is computed in ``fractions.Fraction``; no floats enter any
verdict.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator

from .lattice import DEGREE, Lattice, Vertex, ball, neighbors, sphere

Q = Fraction


def area_formula(kind: Lattice, k: int) -> Q:
    """Closed-form area of one vertex of a k-packing (exact rational).

    Even k uses the ball of radius k/2.  Odd k adds the fractional shares of
    the boundary sphere; the case split differs per lattice.
    """
    if k <= 0:
        raise ValueError("packing radius must be positive")
    if kind is Lattice.HEX:
        if k % 2 == 0:
            m = k // 2
            return Q(3 * m * m + 3 * m + 2, 2)
        if k % 4 == 1:
            m = (k - 1) // 4
            return Q(6 * m * m + 6 * m + 2)
        m = (k - 3) // 4
        return Q(6 * m * m + 12 * m + 6)
    if kind is Lattice.SQUARE:
        if k % 2 == 0:
            m = k // 2
            return Q(2 * m * m + 2 * m + 1)
        m = (k - 1) // 2
        return Q(2 * m * m + 4 * m + 2)
    if k % 2 == 0:
        m = k // 2
        return Q(3 * m * m + 3 * m + 1)
    m = (k - 1) // 2
    return Q(3 * m * m + 6 * m + 3)


def area_direct(kind: Lattice, k: int, center: Vertex = (0, 0)) -> Q:
    """Area of a k-packing vertex computed directly from balls and spheres.

    Even k: |ball(k/2)|.  Odd k: |ball(floor(k/2))| plus, for every vertex u
    of the sphere of radius ceil(k/2), the share
    (|N(u) in ball| + |N(u) in sphere| / 2) / deg(u).
    """
    if k <= 0:
        raise ValueError("packing radius must be positive")
    if k % 2 == 0:
        return Q(len(ball(kind, center, k // 2)))
    inner = ball(kind, center, k // 2)
    boundary = sphere(kind, center, k // 2 + 1)
    total = Q(len(inner))
    deg = DEGREE[kind]
    for u in boundary:
        nbrs = neighbors(kind, u)
        in_ball = sum(1 for w in nbrs if w in inner)
        in_sphere = sum(1 for w in nbrs if w in boundary)
        total += Q(2 * in_ball + in_sphere, 2 * deg)
    return total


def density_upper_bound(kind: Lattice, i: int) -> Q:
    """Largest possible density of an i-packing: 1 / area(i)."""
    return 1 / area_formula(kind, i)


# -- color value sequences ---------------------------------------------------


@dataclass(frozen=True)
class SequenceSpec:
    """Nondecreasing color-value sequence.

    Either an explicit finite tuple of values, or the infinite (d, n) rule
    value(i) = d + (i - 1) // n  (n colors at each value, starting at d).
    """

    values: tuple[int, ...] | None = None
    d: int | None = None
    n: int | None = None

    def __post_init__(self) -> None:
        if self.values is not None:
            if self.d is not None or self.n is not None:
                raise ValueError("give either explicit values or a (d, n) rule")
            if not self.values or any(v <= 0 for v in self.values):
                raise ValueError("explicit values must be positive")
            if any(a > b for a, b in zip(self.values, self.values[1:])):
                raise ValueError("explicit values must be nondecreasing")
        else:
            if self.d is None or self.n is None or self.d <= 0 or self.n <= 0:
                raise ValueError("(d, n) rule needs positive d and n")

    @staticmethod
    def dn(d: int, n: int) -> "SequenceSpec":
        return SequenceSpec(d=d, n=n)

    @staticmethod
    def explicit(values) -> "SequenceSpec":
        return SequenceSpec(values=tuple(values))

    @property
    def is_rule(self) -> bool:
        return self.values is None

    def value(self, i: int) -> int:
        """Value of color index i (1-based)."""
        if i < 1:
            raise ValueError("color indices are 1-based")
        if self.values is not None:
            if i > len(self.values):
                raise IndexError("explicit sequence exhausted")
            return self.values[i - 1]
        return self.d + (i - 1) // self.n

    def iter_values(self) -> Iterator[int]:
        if self.values is not None:
            yield from self.values
        else:
            i = 1
            while True:
                yield self.value(i)
                i += 1

    def describe(self) -> str:
        if self.values is not None:
            return "(" + ",".join(map(str, self.values)) + ")"
        return f"(d={self.d}, n={self.n})"


def decimal_enclosure(x: Q, places: int = 12) -> tuple[str, str]:
    """Exact decimal bounds floor/ceil of x at the given precision."""
    scale = 10 ** places
    lo = x.numerator * scale // x.denominator
    hi = lo if lo * x.denominator == x.numerator * scale else lo + 1

    def fmt(v: int) -> str:
        sign = "-" if v < 0 else ""
        v = abs(v)
        return f"{sign}{v // scale}.{v % scale:0{places}d}"

    return fmt(lo), fmt(hi)


def _rational_text(x: Q) -> str:
    """Exact rational, falling back to a certified decimal enclosure when
    the reduced form is too wide to print."""
    if x.denominator < 10 ** 40:
        return f"{x.numerator}/{x.denominator}"
    lo, hi = decimal_enclosure(x)
    digits = -(-x.denominator.bit_length() * 30103 // 100000)  # ceil log10
    return f"in [{lo}, {hi}]  (exact rational with ~{digits}-digit denominator)"


# A(i) >= TAIL_COEFF * i^2 for every i >= 1 (checked exhaustively in the
# tests up to 10^4), hence sum_{i>K} 1/A(i) <= (1/coeff) * 1/K.
TAIL_COEFF = {
    Lattice.HEX: Q(3, 8),
    Lattice.SQUARE: Q(1, 2),
    Lattice.TRI: Q(3, 4),
}

# Range sums of reciprocal areas are reused heavily by the table
# reproduction; they are pure in (kind, start, stop).
_RANGE_SUM_CACHE: dict[tuple[Lattice, int, int], Q] = {}


def _recip_area_range_sum(kind: Lattice, start: int, stop: int) -> Q:
    """sum_{i=start..stop} 1 / area(i), cached."""
    key = (kind, start, stop)
    if key not in _RANGE_SUM_CACHE:
        total = Q(0)
        for i in range(start, stop + 1):
            total += 1 / area_formula(kind, i)
        _RANGE_SUM_CACHE[key] = total
    return _RANGE_SUM_CACHE[key]


@dataclass(frozen=True)
class FeasibilityCertificate:
    """Exact partial density sum plus a rigorous tail majorant.

    ``infeasible`` means partial_sum + tail_bound < 1: every color class has
    density at most the reciprocal area of its value, the per-value budget
    can never add up to cover the lattice, so no such coloring exists and
    the corresponding chromatic number is infinite.  Otherwise the check is
    inconclusive (it never proves colorability).
    """

    kind: Lattice
    spec: SequenceSpec
    horizon: int
    partial_sum: Q
    tail_bound: Q
    terms: int

    @property
    def total_bound(self) -> Q:
        return self.partial_sum + self.tail_bound

    @property
    def infeasible(self) -> bool:
        return self.total_bound < 1

    @property
    def verdict(self) -> str:
        return "INFEASIBLE" if self.infeasible else "INCONCLUSIVE"

    def report(self) -> str:
        lines = [
            f"lattice        {self.kind.value}",
            f"sequence       {self.spec.describe()}",
            f"horizon        {self.horizon}",
            f"terms          {self.terms}",
            f"partial_sum    {_rational_text(self.partial_sum)}",
            f"tail_bound     {_rational_text(self.tail_bound)}",
            f"total_bound    {_rational_text(self.total_bound)}",
            f"verdict        {self.verdict}",
        ]
        if self.infeasible:
            lines.append("conclusion     no such coloring exists (chromatic number = infinity)")
        return "\n".join(lines)


def feasibility_certificate(kind: Lattice, spec: SequenceSpec,
                            horizon: int = 10_000) -> FeasibilityCertificate:
    """Certificate for the infinite-sum test of the sequence's densities.

    For a (d, n) rule the exact partial sum is sum_{i=d..horizon} n / A(i)
    and the tail majorant covers all values beyond the horizon.  For an
    explicit finite sequence the sum is over the listed values and the tail
    is zero (the certificate then rules out colorings that use exactly the
    listed colors).
    """
    if spec.is_rule:
        if horizon < spec.d:
            raise ValueError("horizon must reach the first color value")
        partial = spec.n * _recip_area_range_sum(kind, spec.d, horizon)
        tail = Q(spec.n) / (TAIL_COEFF[kind] * horizon)
        return FeasibilityCertificate(kind, spec, horizon, partial, tail,
                                      horizon - spec.d + 1)
    partial = Q(0)
    for v in spec.values:
        partial += 1 / area_formula(kind, v)
    return FeasibilityCertificate(kind, spec, horizon, partial, Q(0), len(spec.values))


def color_count_lower_bound(kind: Lattice, spec: SequenceSpec, cap: int = 100_000) -> int:
    """Smallest k whose first k values have reciprocal-area sum >= 1.

    Any coloring with fewer colors covers total density < 1, so the
    chromatic number is at least the returned k.
    """
    total = Q(0)
    for k, v in enumerate(spec.iter_values(), start=1):
        total += 1 / area_formula(kind, v)
        if total >= 1:
            return k
        if k >= cap:
            raise RuntimeError(
                f"density sum still below 1 (<= {decimal_enclosure(total)[1]}) "
                f"after {cap} colors; no finite lower bound at this cap")
    raise RuntimeError("explicit sequence exhausted before density reached 1")
