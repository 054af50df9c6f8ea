"""Periodic colorings and their verification.

Two realizations are supported.  ``LatticeColoring`` is a coloring whose
color classes are finite unions of sublattice cosets; class distances are
certified exactly by bounded lattice-vector searches, and the partition
property is certified algebraically (pairwise coset disjointness plus the
density identity).  ``GridColoring`` is a coloring given by an explicit
rectangular fundamental domain (used for the shipped 24x24 pattern); it is
verified by scanning distance balls with wraparound.

A coloring is a valid S-packing coloring when the class of every color of
value v has pairwise distance greater than v, the classes partition the
vertex set, and for a (d, n) rule no value is used by more than n colors.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import lcm

import numpy as np

from .density import SequenceSpec
from .lattice import Lattice, Vertex, distance, vertex_type
from .packings import PackingSpec, Sublattice, coset_min_distance


def _single_type_parts(spec: PackingSpec) -> list[PackingSpec]:
    """Split a coset into parts whose vertices all share one brick-wall type.

    A coset mixes both types exactly when its lattice contains an
    odd-coordinate-sum vector; halving along the even-sum sublattice then
    yields two single-type cosets.  Non-hexagonal cosets are returned
    whole (types are irrelevant there).
    """
    if spec.kind is not Lattice.HEX:
        return [spec]
    g1, g2 = spec.lat.g1, spec.lat.g2
    p1, p2 = (g1[0] + g1[1]) % 2, (g2[0] + g2[1]) % 2
    if p1 == 0 and p2 == 0:
        return [spec]
    if p1 == 0:
        even = Sublattice(g1, (2 * g2[0], 2 * g2[1]))
    elif p2 == 0:
        even = Sublattice((2 * g1[0], 2 * g1[1]), g2)
    else:
        even = Sublattice((g1[0] + g2[0], g1[1] + g2[1]), (2 * g2[0], 2 * g2[1]))
    return [PackingSpec(spec.kind, even,
                        (spec.offset[0] + t[0], spec.offset[1] + t[1]))
            for t in even.transversal_in(spec.lat)]


@dataclass(frozen=True)
class ColorClass:
    """One color: its packing value and the cosets it colors."""

    value: int
    cosets: tuple[PackingSpec, ...]

    def density(self) -> Fraction:
        return sum((c.density for c in self.cosets), Fraction(0))

    def min_distance(self) -> int:
        """Exact minimum pairwise distance within the class.

        Cross-coset minima run over the difference coset of the sum
        lattice.  On the brick-wall lattice the minimum depends on the
        vertex type of the base endpoint, so the base coset is first split
        into single-type parts and each part contributes with its own type.
        """
        best = None
        for i, a in enumerate(self.cosets):
            d, _ = coset_min_distance(a.kind, a.lat)
            best = d if best is None else min(best, d)
            for b in self.cosets[i + 1:]:
                for part in _single_type_parts(b):
                    total = a.lat.sum_with(part.lat)
                    delta = (a.offset[0] - part.offset[0],
                             a.offset[1] - part.offset[1])
                    d, _ = coset_min_distance(
                        a.kind, total, delta,
                        base_types=(vertex_type(part.offset),))
                    best = d if best is None else min(best, d)
        if best is None:
            raise ValueError("empty color class")
        return best


@dataclass(frozen=True)
class LatticeColoring:
    """Total periodic coloring with lattice-coset color classes."""

    name: str
    kind: Lattice
    spec: SequenceSpec
    classes: tuple[ColorClass, ...]

    @property
    def color_count(self) -> int:
        return len(self.classes)

    def census(self) -> dict[int, int]:
        """value -> number of distinct colors carrying that value."""
        out: dict[int, int] = {}
        for cls in self.classes:
            out[cls.value] = out.get(cls.value, 0) + 1
        return out

    def all_cosets(self) -> list[tuple[int, PackingSpec]]:
        return [(i, c) for i, cls in enumerate(self.classes) for c in cls.cosets]

    def period(self) -> tuple[int, int]:
        """Axis-aligned period of the coloring (both directions)."""
        p = 1
        for _, c in self.all_cosets():
            p = lcm(p, c.lat.index)
        return (p, p)

    def color_at(self, v: Vertex) -> int:
        for i, cls in enumerate(self.classes):
            for c in cls.cosets:
                if c.contains(v):
                    return i
        raise ValueError(f"vertex {v} is uncolored")


@dataclass
class ColoringReport:
    ok: bool
    checks: list[str]
    violations: list[str]

    def __str__(self) -> str:
        head = "coloring OK" if self.ok else "coloring FAIL"
        body = [f"  [pass] {c}" for c in self.checks]
        body += [f"  [FAIL] {v}" for v in self.violations]
        return "\n".join([head] + body)


def build_coloring(name: str, kind: Lattice, spec: SequenceSpec,
                   classes: list[tuple[int, list[PackingSpec]]]) -> LatticeColoring:
    """Assemble a coloring from (value, cosets) pairs and certify it.

    Classes are canonically ordered by (value, insertion order).  The plan
    is rejected when the classes fail to partition the lattice or when any
    class is not a packing of its value.
    """
    ordered = sorted(enumerate(classes), key=lambda t: (t[1][0], t[0]))
    cc = tuple(ColorClass(v, tuple(cs)) for _, (v, cs) in ordered)
    coloring = LatticeColoring(name, kind, spec, cc)
    report = verify_s_coloring(coloring)
    if not report.ok:
        raise ValueError(f"plan {name!r} rejected:\n{report}")
    return coloring


def verify_s_coloring(coloring: LatticeColoring) -> ColoringReport:
    """Full verification: partition, packing distances, sequence admissibility."""
    checks: list[str] = []
    violations: list[str] = []

    # Sequence admissibility: class values must be exactly the first k
    # values of the sequence (recomputed, never trusted from the plan).
    k = coloring.color_count
    got = [cls.value for cls in coloring.classes]
    try:
        want = [coloring.spec.value(i) for i in range(1, k + 1)]
    except IndexError:
        want = None
    if want is None:
        violations.append(f"sequence has fewer than {k} values")
    elif got != want:
        violations.append(f"class values {got} != sequence prefix {want}")
    else:
        checks.append(f"{k} classes match the sequence prefix {coloring.spec.describe()}")

    # Partition: pairwise disjoint cosets with total density 1.
    cosets = coloring.all_cosets()
    total = sum((c.density for _, c in cosets), Fraction(0))
    if total != 1:
        violations.append(f"class densities sum to {total}, not 1")
    clash = None
    for i in range(len(cosets)):
        for j in range(i + 1, len(cosets)):
            if not cosets[i][1].disjoint_from(cosets[j][1]):
                clash = (i, j)
                break
        if clash:
            break
    if clash:
        i, j = clash
        violations.append(
            f"cosets of colors {cosets[i][0] + 1} and {cosets[j][0] + 1} intersect")
    if total == 1 and not clash:
        checks.append(f"{len(cosets)} cosets partition the lattice "
                      "(disjoint, densities sum to 1)")

    # Packing property per class.
    worst = []
    for idx, cls in enumerate(coloring.classes):
        md = cls.min_distance()
        if md <= cls.value:
            violations.append(
                f"color {idx + 1} (value {cls.value}) has min distance {md}")
        worst.append(md - cls.value)
    if not any(v.startswith("color") for v in violations):
        checks.append("every color class is a packing of its value "
                      f"(min slack {min(worst)})")

    return ColoringReport(not violations, checks, violations)


def paint_window(coloring: LatticeColoring, a_min: int, a_max: int,
                 b_min: int, b_max: int) -> dict[Vertex, int]:
    """Color index of every vertex in a window (slow path, for spot checks)."""
    out = {}
    for a in range(a_min, a_max + 1):
        for b in range(b_min, b_max + 1):
            out[(a, b)] = coloring.color_at((a, b))
    return out


def class_index_grid(coloring, width: int, height: int) -> np.ndarray:
    """grid[b, a] of class indices over [0, width) x [0, height)."""
    if isinstance(coloring, GridColoring):
        grid = np.empty((height, width), dtype=np.int64)
        for b in range(height):
            for a in range(width):
                grid[b, a] = coloring.class_at((a, b))
        return grid
    aa, bb = np.meshgrid(np.arange(width, dtype=np.int64),
                         np.arange(height, dtype=np.int64), indexing="xy")
    grid = np.full((height, width), -1, dtype=np.int64)
    for idx, cls in enumerate(coloring.classes):
        for coset in cls.cosets:
            mask = coset.membership_mask(aa, bb)
            if (grid[mask] >= 0).any():
                raise ValueError("overlapping classes in the window")
            grid[mask] = idx
    if (grid < 0).any():
        raise ValueError("window contains uncolored vertices")
    return grid


def domain_dump(coloring, width: int | None = None, height: int | None = None) -> str:
    """Fundamental-domain dump: period vectors plus one line per vertex."""
    if isinstance(coloring, GridColoring):
        pa, pb = coloring.period
        values = list(coloring.values)
    else:
        pa, pb = coloring.period()
        values = [cls.value for cls in coloring.classes]
    width = pa if width is None else width
    height = pb if height is None else height
    grid = class_index_grid(coloring, width, height)
    lines = [f"coloring {coloring.name}",
             f"lattice {coloring.kind.value}",
             f"period {pa} 0  0 {pb}",
             f"domain {width} {height}",
             f"colors {len(values)}"]
    lines += [f"value {i + 1} {v}" for i, v in enumerate(values)]
    for b in range(height):
        for a in range(width):
            lines.append(f"cell {a} {b} {int(grid[b, a]) + 1}")
    return "\n".join(lines) + "\n"


# -- explicit rectangular-domain colorings -----------------------------------


@dataclass
class GridColoring:
    """Coloring given by an explicit domain with axis periods (pa, pb)."""

    name: str
    kind: Lattice
    spec: SequenceSpec
    values: list[int]                 # value of class i
    cells: dict[Vertex, int]          # fundamental domain -> class index
    period: tuple[int, int]

    @property
    def color_count(self) -> int:
        return len(self.values)

    def class_at(self, v: Vertex) -> int:
        return self.cells[(v[0] % self.period[0], v[1] % self.period[1])]

    def census(self) -> dict[int, int]:
        out: dict[int, int] = {}
        for v in self.values:
            out[v] = out.get(v, 0) + 1
        return out


def verify_grid_coloring(g: GridColoring) -> ColoringReport:
    """Scan verification of a rectangular-domain coloring.

    For every domain vertex u of value v, every vertex within distance v in
    the infinite periodic extension must carry a different color.  Classes
    must cover the domain; the sequence prefix rule is enforced as for
    lattice colorings.
    """
    checks: list[str] = []
    violations: list[str] = []
    pa, pb = g.period
    if len(g.cells) != pa * pb:
        violations.append(f"domain has {len(g.cells)} cells, expected {pa * pb}")
    k = g.color_count
    got = list(g.values)
    want = [g.spec.value(i) for i in range(1, k + 1)]
    if sorted(got) != want:
        violations.append(f"class values {sorted(got)} != sequence prefix {want}")
    else:
        checks.append(f"{k} classes match the sequence prefix {g.spec.describe()}")

    used = set(g.cells.values())
    if not used <= set(range(k)):
        violations.append("cell refers to an unknown class")

    first_bad = None
    for (a, b), cls in sorted(g.cells.items()):
        val = g.values[cls]
        for da in range(-val, val + 1):
            for db in range(-val, val + 1):
                if da == 0 and db == 0:
                    continue
                w = (a + da, b + db)
                if distance(g.kind, (a, b), w) > val:
                    continue
                if g.class_at(w) == cls:
                    first_bad = ((a, b), w, cls)
                    break
            if first_bad:
                break
        if first_bad:
            break
    if first_bad:
        u, w, cls = first_bad
        violations.append(f"vertices {u} and {w} share color {cls + 1} "
                          f"at distance {distance(g.kind, u, w)} <= {g.values[cls]}")
    else:
        checks.append("no two same-color vertices within their color's value")
    return ColoringReport(not violations, checks, violations)


# -- plan file round-trip ------------------------------------------------------


def coloring_to_text(coloring: LatticeColoring) -> str:
    lines = [f"plan {coloring.name}", f"lattice {coloring.kind.value}"]
    if coloring.spec.is_rule:
        lines.append(f"rule d={coloring.spec.d} n={coloring.spec.n}")
    else:
        lines.append("values " + " ".join(map(str, coloring.spec.values)))
    lines.append(f"colors {coloring.color_count}")
    for i, cls in enumerate(coloring.classes, start=1):
        lines.append(f"class {i} value {cls.value}")
        for c in cls.cosets:
            lines.append(f"  coset {c.lat.g1[0]} {c.lat.g1[1]} {c.lat.g2[0]} {c.lat.g2[1]}"
                         f" offset {c.offset[0]} {c.offset[1]}")
    return "\n".join(lines) + "\n"


def coloring_from_text(text: str) -> LatticeColoring:
    name = ""
    kind: Lattice | None = None
    spec: SequenceSpec | None = None
    classes: list[tuple[int, list[PackingSpec]]] = []
    declared = None
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        try:
            if parts[0] == "plan":
                name = " ".join(parts[1:])
            elif parts[0] == "lattice":
                kind = Lattice(parts[1])
            elif parts[0] == "rule":
                d = int(parts[1].removeprefix("d="))
                n = int(parts[2].removeprefix("n="))
                spec = SequenceSpec.dn(d, n)
            elif parts[0] == "values":
                spec = SequenceSpec.explicit(int(p) for p in parts[1:])
            elif parts[0] == "colors":
                declared = int(parts[1])
            elif parts[0] == "class":
                classes.append((int(parts[3]), []))
            elif parts[0] == "coset":
                if kind is None or not classes:
                    raise ValueError("coset before lattice/class")
                g1 = (int(parts[1]), int(parts[2]))
                g2 = (int(parts[3]), int(parts[4]))
                off = (int(parts[6]), int(parts[7]))
                classes[-1][1].append(PackingSpec(kind, Sublattice(g1, g2), off))
            else:
                raise ValueError(f"unknown directive {parts[0]!r}")
        except (IndexError, ValueError) as exc:
            raise ValueError(f"plan file line {lineno}: {exc}") from exc
    if kind is None or spec is None or not classes:
        raise ValueError("plan file missing lattice, sequence or classes")
    if declared is not None and declared != len(classes):
        raise ValueError(f"plan file declares {declared} colors, has {len(classes)}")
    return build_coloring(name, kind, spec, classes)
