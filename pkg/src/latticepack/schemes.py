"""Catalog of base packings and their verified subdivision schemes.

Each lattice carries a family of reference packings (one per small radius)
together with recipes that split a packing into finitely many translated
copies of sparser packings.  Every recipe is parameterized by a scale k (and
a second scale m for the self-similar refinements) and instantiates to a
``Decomposition`` whose translation family is derived canonically as a
transversal, never trusted from a table.

Two recipes deviate from their source material; see the test suite for the
certificates.  The split of the radius-(10k-1) family yields two
(12k-1)-packings (a 2-coloring into anything sparser is impossible: the
coset conflict graph contains triangles), and the mixed 17/23 split of the
radius-5 hexagonal packing and its scaled analogues are realized by a
column construction.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

from .lattice import Lattice
from .packings import (Decomposition, PackingSpec, Sublattice, mixed_decomposition,
                       subdivide)

Vec = tuple[int, int]


def _lat(g1: Vec, g2: Vec) -> Sublattice:
    return Sublattice(g1, g2)


# Reference packings: radius -> generator pair, origin offset (0, 0).
BASE_PACKINGS: dict[Lattice, dict[int, Sublattice]] = {
    Lattice.HEX: {
        2: _lat((2, 1), (4, 0)),
        3: _lat((3, 1), (6, 0)),
        4: _lat((3, 2), (7, 1)),
    },
    Lattice.SQUARE: {
        2: _lat((2, 1), (1, 3)),
        3: _lat((2, 2), (4, 0)),
        4: _lat((3, 2), (8, 1)),
    },
    Lattice.TRI: {
        1: _lat((1, 1), (3, 0)),
        2: _lat((2, 1), (-1, 3)),
        3: _lat((2, 2), (6, 0)),
    },
}

# Stated densities of the reference packings (unit numerator over these).
BASE_DENOMINATORS: dict[Lattice, dict[int, int]] = {
    Lattice.HEX: {2: 4, 3: 6, 4: 11},
    Lattice.SQUARE: {2: 5, 3: 8, 4: 13},
    Lattice.TRI: {1: 3, 2: 7, 3: 12},
}


def base_packing(kind: Lattice, radius: int) -> PackingSpec:
    return PackingSpec(kind, BASE_PACKINGS[kind][radius])


def full_lattice_partition(kind: Lattice, radius: int) -> Decomposition:
    """The whole lattice as translated copies of one reference packing."""
    spec = base_packing(kind, radius)
    parent = PackingSpec(kind, Sublattice((1, 0), (0, 1)))
    dec = subdivide(parent, spec.lat, radius, f"{kind.value}: full lattice into {radius}-packings")
    return dec


@dataclass(frozen=True)
class SchemeDef:
    """One subdivision recipe, instantiable at scales (k, m)."""

    name: str
    kind: Lattice
    uses_m: bool
    build: Callable[[int, int], Decomposition]
    claimed_count: Callable[[int, int], int]
    claimed_radius: Callable[[int, int], int]

    def instantiate(self, k: int = 1, m: int = 1) -> Decomposition:
        if k < 1 or m < 1:
            raise ValueError("scales must be positive")
        dec = self.build(k, m)
        expect = self.claimed_count(k, m)
        if len(dec.children) != expect:
            raise AssertionError(
                f"{self.name}: built {len(dec.children)} children, claimed {expect}")
        return dec


def _family(kind: Lattice, parent_of_k: Callable[[int], Sublattice],
            child_of_k: Callable[[int], Sublattice], radius_of_k) -> tuple:
    """(build, build_rescaled) pair for a child family and its m-refinement."""

    def build(k: int, m: int) -> Decomposition:
        parent = PackingSpec(kind, parent_of_k(k))
        return subdivide(parent, child_of_k(k), radius_of_k(k))

    def build_rescaled(k: int, m: int) -> Decomposition:
        parent = PackingSpec(kind, child_of_k(k))
        return subdivide(parent, child_of_k(m * k), radius_of_k(m * k))

    return build, build_rescaled


def _split(kind: Lattice, parent_of_k: Callable[[int], Sublattice],
           child_of_k: Callable[[int], Sublattice], radius_of_k) -> Callable:
    def build(k: int, m: int) -> Decomposition:
        parent = PackingSpec(kind, parent_of_k(k))
        return subdivide(parent, child_of_k(k), radius_of_k(k))

    return build


def _hex_mixed_17_23(k: int, m: int) -> Decomposition:
    """Radius-(6k-1) hexagonal packing into 4 copies at radius 18k-1 and 6 at 24k-1.

    Column construction inside the parent: in parent coordinates the two
    child lattices advance by two columns, so even columns are tiled by the
    four cosets of the denser child and odd columns by the six cosets of
    the sparser one.
    """
    parent = PackingSpec(Lattice.HEX, _lat((3 * k, 3 * k), (6 * k, 0)))
    dense = _lat((12 * k, 6 * k), (24 * k, 0))       # radius 18k - 1
    sparse = _lat((18 * k, 6 * k), (36 * k, 0))      # radius 24k - 1
    dense_offsets = [(6 * k * e, 0) for e in range(4)]
    sparse_offsets = [(3 * k + 6 * k * e, 3 * k) for e in range(6)]
    return mixed_decomposition(
        f"hex 5-packing into four 17- and six 23-packings (k={k})", parent,
        [(dense, dense_offsets, 18 * k - 1), (sparse, sparse_offsets, 24 * k - 1)])


def _catalog() -> list[SchemeDef]:
    H, S, T = Lattice.HEX, Lattice.SQUARE, Lattice.TRI
    defs: list[SchemeDef] = []

    def add(name, kind, build, count, radius, uses_m=False):
        defs.append(SchemeDef(name, kind, uses_m, build, count, radius))

    # --- hexagonal 2-packing ------------------------------------------------
    a_h2 = lambda k: _lat((2 * k, k), (4 * k, 0))          # radius 3k - 1
    b_h2 = lambda k: _lat((4 * k, 0), (0, 2 * k))          # radius 4k - 1
    f1, f1m = _family(H, lambda k: BASE_PACKINGS[H][2], a_h2, lambda k: 3 * k - 1)
    add("hex-2.segments-3k-1", H, f1, lambda k, m: k * k, lambda k, m: 3 * k - 1)
    add("hex-2.refine-3k-1", H, f1m, lambda k, m: m * m, lambda k, m: 3 * m * k - 1, uses_m=True)
    f2, f2m = _family(H, lambda k: BASE_PACKINGS[H][2], b_h2, lambda k: 4 * k - 1)
    add("hex-2.grid-4k-1", H, f2, lambda k, m: 2 * k * k, lambda k, m: 4 * k - 1)
    add("hex-2.refine-4k-1", H, f2m, lambda k, m: m * m, lambda k, m: 4 * m * k - 1, uses_m=True)
    add("hex-2.split-4k-1-into-6k-1", H,
        _split(H, b_h2, lambda k: a_h2(2 * k), lambda k: 6 * k - 1),
        lambda k, m: 2, lambda k, m: 6 * k - 1)

    # --- hexagonal 3-packing ------------------------------------------------
    a_h3 = lambda k: _lat((3 * k, k), (6 * k, 0))          # radius 4k - 1
    c_h3 = lambda k: _lat((3 * k, 3 * k), (6 * k, 0))      # radius 6k - 1
    e_h3 = lambda k: _lat((6 * k, 4 * k), (12 * k, 0))     # radius 10k - 1
    g_h3 = lambda k: _lat((12 * k, 6 * k), (24 * k, 0))    # radius 18k - 1
    for tag, fam, rad, cnt in (
            ("4k-1", a_h3, lambda k: 4 * k - 1, lambda k: k * k),
            ("6k-1", c_h3, lambda k: 6 * k - 1, lambda k: 3 * k * k),
            ("10k-1", e_h3, lambda k: 10 * k - 1, lambda k: 8 * k * k),
            ("18k-1", g_h3, lambda k: 18 * k - 1, lambda k: 24 * k * k)):
        fb, fbm = _family(H, lambda k: BASE_PACKINGS[H][3], fam, rad)
        add(f"hex-3.{tag}", H, fb, lambda k, m, c=cnt: c(k), lambda k, m, r=rad: r(k))
        add(f"hex-3.refine-{tag}", H, fbm, lambda k, m: m * m,
            lambda k, m, r=rad: r(m * k), uses_m=True)
    add("hex-3.split-6k-1-into-12k-1", H,
        _split(H, c_h3, lambda k: _lat((9 * k, 3 * k), (18 * k, 0)), lambda k: 12 * k - 1),
        lambda k, m: 3, lambda k, m: 12 * k - 1)
    # Two sparser packings halving the 10k-1 family; the halves reach
    # minimum distance 12k exactly, so they are (12k-1)-packings.
    add("hex-3.split-10k-1-into-12k-1", H,
        _split(H, e_h3, lambda k: _lat((12 * k, 8 * k), (12 * k, 0)), lambda k: 12 * k - 1),
        lambda k, m: 2, lambda k, m: 12 * k - 1)
    add("hex-3.mixed-6k-1-into-18k-1-and-24k-1", H, lambda k, m: _hex_mixed_17_23(k, m),
        lambda k, m: 10, lambda k, m: 18 * k - 1)

    # --- hexagonal 4-packing ------------------------------------------------
    p1_h4 = lambda k: _lat((3 * k, 2 * k), (-k, 3 * k))    # radius 5k - 1
    p2_h4 = lambda k: _lat((7 * k, k), (-k, 3 * k))        # radius 6k - 1
    p3_h4 = lambda k: _lat((7 * k, k), (2 * k, 5 * k))  # radius 8k - 1
    p4_h4 = lambda k: _lat((-2 * k, 6 * k), (11 * k, 0))   # radius 11k - 1
    for tag, fam, rad, cnt in (
            ("5k-1", p1_h4, lambda k: 5 * k - 1, lambda k: k * k),
            ("6k-1", p2_h4, lambda k: 6 * k - 1, lambda k: 2 * k * k),
            ("8k-1", p3_h4, lambda k: 8 * k - 1, lambda k: 3 * k * k),
            ("11k-1", p4_h4, lambda k: 11 * k - 1, lambda k: 6 * k * k)):
        fb, fbm = _family(H, lambda k: BASE_PACKINGS[H][4], fam, rad)
        add(f"hex-4.{tag}", H, fb, lambda k, m, c=cnt: c(k), lambda k, m, r=rad: r(k))
        add(f"hex-4.refine-{tag}", H, fbm, lambda k, m: m * m,
            lambda k, m, r=rad: r(m * k), uses_m=True)
    add("hex-4.split-6k-1-into-10k-1", H,
        _split(H, p2_h4, lambda k: _lat((6 * k, 4 * k), (-2 * k, 6 * k)), lambda k: 10 * k - 1),
        lambda k, m: 2, lambda k, m: 10 * k - 1)
    add("hex-4.split-5k-1-into-6k-1", H,
        _split(H, p1_h4, lambda k: _lat((6 * k, 4 * k), (-k, 3 * k)), lambda k: 6 * k - 1),
        lambda k, m: 2, lambda k, m: 6 * k - 1)
    add("hex-4.split-8k-1-into-15k-1", H,
        _split(H, p3_h4, lambda k: _lat((9 * k, 6 * k), (6 * k, 15 * k)), lambda k: 15 * k - 1),
        lambda k, m: 3, lambda k, m: 15 * k - 1)
    add("hex-4.split-5k-1-into-8k-1", H,
        _split(H, p1_h4, lambda k: _lat((2 * k, 5 * k), (-3 * k, 9 * k)), lambda k: 8 * k - 1),
        lambda k, m: 3, lambda k, m: 8 * k - 1)

    # --- square 2-packing ---------------------------------------------------
    p1_s2 = lambda k: _lat((2 * k, k), (-k, 2 * k))        # radius 3k - 1
    p2_s2 = lambda k: _lat((4 * k, 2 * k), (k, 3 * k))     # radius 4k - 1
    for tag, fam, rad, cnt in (
            ("3k-1", p1_s2, lambda k: 3 * k - 1, lambda k: k * k),
            ("4k-1", p2_s2, lambda k: 4 * k - 1, lambda k: 2 * k * k)):
        fb, fbm = _family(S, lambda k: BASE_PACKINGS[S][2], fam, rad)
        add(f"square-2.{tag}", S, fb, lambda k, m, c=cnt: c(k), lambda k, m, r=rad: r(k))
        add(f"square-2.refine-{tag}", S, fbm, lambda k, m: m * m,
            lambda k, m, r=rad: r(m * k), uses_m=True)
    add("square-2.split-4k-1-into-6k-1", S,
        _split(S, p2_s2, lambda k: _lat((4 * k, 2 * k), (2 * k, 6 * k)), lambda k: 6 * k - 1),
        lambda k, m: 2, lambda k, m: 6 * k - 1)
    add("square-2.split-3k-1-into-4k-1", S,
        _split(S, p1_s2, lambda k: _lat((k, 3 * k), (-2 * k, 4 * k)), lambda k: 4 * k - 1),
        lambda k, m: 2, lambda k, m: 4 * k - 1)

    # --- square 3-packing ---------------------------------------------------
    p1_s3 = lambda k: _lat((2 * k, 2 * k), (4 * k, 0))     # radius 4k - 1
    fb, fbm = _family(S, lambda k: BASE_PACKINGS[S][3], p1_s3, lambda k: 4 * k - 1)
    add("square-3.4k-1", S, fb, lambda k, m: k * k, lambda k, m: 4 * k - 1)
    add("square-3.refine-4k-1", S, fbm, lambda k, m: m * m,
        lambda k, m: 4 * m * k - 1, uses_m=True)

    # --- square 4-packing ---------------------------------------------------
    p1_s4 = lambda k: _lat((3 * k, 2 * k), (-2 * k, 3 * k))  # radius 5k - 1
    p2_s4 = lambda k: _lat((6 * k, 4 * k), (k, 5 * k))       # radius 6k - 1
    for tag, fam, rad, cnt in (
            ("5k-1", p1_s4, lambda k: 5 * k - 1, lambda k: k * k),
            ("6k-1", p2_s4, lambda k: 6 * k - 1, lambda k: 2 * k * k)):
        fb, fbm = _family(S, lambda k: BASE_PACKINGS[S][4], fam, rad)
        add(f"square-4.{tag}", S, fb, lambda k, m, c=cnt: c(k), lambda k, m, r=rad: r(k))
        add(f"square-4.refine-{tag}", S, fbm, lambda k, m: m * m,
            lambda k, m, r=rad: r(m * k), uses_m=True)
    add("square-4.split-6k-1-into-10k-1", S,
        _split(S, p2_s4, lambda k: _lat((6 * k, 4 * k), (2 * k, 10 * k)), lambda k: 10 * k - 1),
        lambda k, m: 2, lambda k, m: 10 * k - 1)
    add("square-4.split-5k-1-into-6k-1", S,
        _split(S, p1_s4, lambda k: _lat((k, 5 * k), (-4 * k, 6 * k)), lambda k: 6 * k - 1),
        lambda k, m: 2, lambda k, m: 6 * k - 1)

    # --- triangular 1-packing -----------------------------------------------
    p1_t1 = lambda k: _lat((k, k), (3 * k, 0))             # radius 2k - 1
    p2_t1 = lambda k: _lat((3 * k, 3 * k), (3 * k, 0))     # radius 3k - 1
    for tag, fam, rad, cnt in (
            ("2k-1", p1_t1, lambda k: 2 * k - 1, lambda k: k * k),
            ("3k-1", p2_t1, lambda k: 3 * k - 1, lambda k: 3 * k * k)):
        fb, fbm = _family(T, lambda k: BASE_PACKINGS[T][1], fam, rad)
        add(f"tri-1.{tag}", T, fb, lambda k, m, c=cnt: c(k), lambda k, m, r=rad: r(k))
        add(f"tri-1.refine-{tag}", T, fbm, lambda k, m: m * m,
            lambda k, m, r=rad: r(m * k), uses_m=True)
    add("tri-1.split-2k-1-into-3k-1", T,
        _split(T, p1_t1, p2_t1, lambda k: 3 * k - 1),
        lambda k, m: 3, lambda k, m: 3 * k - 1)

    # --- triangular 2-packing -----------------------------------------------
    p1_t2 = lambda k: _lat((2 * k, k), (7 * k, 0))         # radius 3k - 1
    fb, fbm = _family(T, lambda k: BASE_PACKINGS[T][2], p1_t2, lambda k: 3 * k - 1)
    add("tri-2.3k-1", T, fb, lambda k, m: k * k, lambda k, m: 3 * k - 1)
    add("tri-2.refine-3k-1", T, fbm, lambda k, m: m * m,
        lambda k, m: 3 * m * k - 1, uses_m=True)

    # --- triangular 3-packing -----------------------------------------------
    p1_t3 = lambda k: _lat((2 * k, 2 * k), (6 * k, 0))     # radius 4k - 1
    p2_t3 = lambda k: _lat((6 * k, 6 * k), (6 * k, 0))     # radius 6k - 1
    for tag, fam, rad, cnt in (
            ("4k-1", p1_t3, lambda k: 4 * k - 1, lambda k: k * k),
            ("6k-1", p2_t3, lambda k: 6 * k - 1, lambda k: 3 * k * k)):
        fb, fbm = _family(T, lambda k: BASE_PACKINGS[T][3], fam, rad)
        add(f"tri-3.{tag}", T, fb, lambda k, m, c=cnt: c(k), lambda k, m, r=rad: r(k))
        add(f"tri-3.refine-{tag}", T, fbm, lambda k, m: m * m,
            lambda k, m, r=rad: r(m * k), uses_m=True)
    add("tri-3.split-6k-1-into-12k-1", T,
        _split(T, p2_t3, lambda k: _lat((6 * k, 6 * k), (18 * k, 0)), lambda k: 12 * k - 1),
        lambda k, m: 3, lambda k, m: 12 * k - 1)

    # --- full-lattice base partitions ---------------------------------------
    for kind, radii in ((H, (2, 3, 4)), (S, (2, 3, 4)), (T, (1, 2, 3))):
        for r in radii:
            add(f"{kind.value}.base-{r}", kind,
                lambda k, m, kk=kind, rr=r: full_lattice_partition(kk, rr),
                lambda k, m, kk=kind, rr=r: BASE_DENOMINATORS[kk][rr],
                lambda k, m, rr=r: rr)

    return defs


SCHEME_DEFS: dict[str, SchemeDef] = {d.name: d for d in _catalog()}


def scheme_catalog() -> list[SchemeDef]:
    return list(SCHEME_DEFS.values())


def get_scheme(name: str) -> SchemeDef:
    try:
        return SCHEME_DEFS[name]
    except KeyError:
        raise KeyError(f"unknown scheme {name!r}; known: {sorted(SCHEME_DEFS)}") from None


def compose(outer: Decomposition, child_index: int, inner: Decomposition) -> Decomposition:
    """Replace one child of ``outer`` by the children of ``inner``.

    ``inner.parent`` must be the selected child coset (possibly with a
    different but equivalent offset); the result is re-checked by the
    caller through the usual partition verification.
    """
    target = outer.children[child_index].spec
    if inner.parent.kind is not target.kind or inner.parent.lat != target.lat:
        raise ValueError("inner parent does not match the selected child lattice")
    diff = (target.offset[0] - inner.parent.offset[0],
            target.offset[1] - inner.parent.offset[1])
    if not inner.parent.lat.contains(diff):
        raise ValueError("inner parent is not the same coset as the selected child")
    children = list(outer.children)
    replacement = [type(ch)(ch.spec.translate(diff), ch.radius) for ch in inner.children]
    children[child_index:child_index + 1] = replacement
    return Decomposition(f"{outer.name} + {inner.name}", outer.parent, tuple(children))


def export_catalog_text(k_values=(1, 2, 3), m_values=(1, 2, 3)) -> str:
    """Structured text dump of every scheme instantiation (for re-verification)."""
    lines = []
    for sd in scheme_catalog():
        ms = m_values if sd.uses_m else (1,)
        for k in k_values:
            for m in ms:
                dec = sd.instantiate(k, m)
                lines.append(f"scheme {sd.name} k={k} m={m}")
                lines.append(f"  lattice {sd.kind.value}")
                p = dec.parent
                lines.append(f"  parent {p.lat.g1[0]} {p.lat.g1[1]} {p.lat.g2[0]} {p.lat.g2[1]}"
                             f" offset {p.offset[0]} {p.offset[1]}")
                for ch in dec.children:
                    c = ch.spec
                    lines.append(f"  child radius {ch.radius} "
                                 f"{c.lat.g1[0]} {c.lat.g1[1]} {c.lat.g2[0]} {c.lat.g2[1]}"
                                 f" offset {c.offset[0]} {c.offset[1]}")
                lines.append("")
    return "\n".join(lines)
