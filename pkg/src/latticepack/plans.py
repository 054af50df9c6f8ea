"""Catalog of periodic coloring plans for the (d, n) color sequences.

Each plan partitions its lattice into translated reference packings, keeps
some of them whole, subdivides the rest with the scheme catalog, and
assigns every resulting coset a color value.  ``build()`` assembles and
certifies the coloring; the claimed color count of every plan is an upper
bound for the matching (d, n) chromatic number once the build verifies.

Where a recorded decomposition is ambiguous about which scheme produces
the children, any verified composition with the right radii and counts is
used; correctness rests on the certification, not on the choice.
"""

from __future__ import annotations

from dataclasses import dataclass

from .density import SequenceSpec
from .lattice import Lattice
from .packings import PackingSpec, Sublattice
from .schemes import BASE_PACKINGS, get_scheme

H, S, T = Lattice.HEX, Lattice.SQUARE, Lattice.TRI

Vec = tuple[int, int]
ClassList = list[tuple[int, list[PackingSpec]]]


def base_cosets(kind: Lattice, radius: int) -> list[PackingSpec]:
    """Translates of the reference packing tiling the whole lattice."""
    lat = BASE_PACKINGS[kind][radius]
    full = Sublattice((1, 0), (0, 1))
    return [PackingSpec(kind, lat, t) for t in lat.transversal_in(full)]


def children_of(parent: PackingSpec, child: Sublattice) -> list[PackingSpec]:
    """All cosets of a sublattice inside a parent coset."""
    return [PackingSpec(parent.kind, child,
                        (parent.offset[0] + t[0], parent.offset[1] + t[1]))
            for t in child.transversal_in(parent.lat)]


def spread(values: list[int], cosets: list[PackingSpec]) -> ClassList:
    """One single-coset class per value, in order."""
    if len(values) != len(cosets):
        raise ValueError(f"{len(values)} values for {len(cosets)} cosets")
    return [(v, [c]) for v, c in zip(values, cosets)]


@dataclass(frozen=True)
class Plan:
    name: str
    kind: Lattice
    d: int
    n: int
    claimed_colors: int
    classes: ClassList

    @property
    def spec(self) -> SequenceSpec:
        return SequenceSpec.dn(self.d, self.n)

    def build(self):
        from .coloring import build_coloring
        coloring = build_coloring(self.name, self.kind, self.spec,
                                  [(v, list(cs)) for v, cs in self.classes])
        if coloring.color_count != self.claimed_colors:
            raise ValueError(f"plan {self.name} built {coloring.color_count} colors, "
                             f"claimed {self.claimed_colors}")
        return coloring


def _whole_lattice_plan(kind: Lattice, d: int, n: int) -> Plan:
    cosets = base_cosets(kind, d)
    classes = [(d, [c]) for c in cosets]
    return Plan(f"{kind.value}-{d}-{n}", kind, d, n, len(cosets), classes)


def _bipartition_plan(kind: Lattice, n: int = 2) -> Plan:
    halves = children_of(PackingSpec(kind, Sublattice((1, 0), (0, 1))),
                         Sublattice((1, 1), (2, 0)))
    return Plan(f"{kind.value}-1-{n}", kind, 1, n, 2, [(1, [c]) for c in halves])


# -- hexagonal plans ----------------------------------------------------------


def _hex_2_2() -> Plan:
    base = base_cosets(H, 2)
    b1 = Sublattice((4, 0), (0, 2))       # 3-packing halves
    a2 = Sublattice((4, 2), (8, 0))       # 5-packing quarters
    classes: ClassList = [(2, [base[0]]), (2, [base[1]])]
    classes += spread([3, 3], children_of(base[2], b1))
    classes += spread([4, 4, 5, 5], children_of(base[3], a2))
    return Plan("hex-2-2", H, 2, 2, 8, classes)


def _hex_2_3() -> Plan:
    base = base_cosets(H, 2)
    b1 = Sublattice((4, 0), (0, 2))
    classes: ClassList = [(2, [c]) for c in base[:3]]
    classes += spread([3, 3], children_of(base[3], b1))
    return Plan("hex-2-3", H, 2, 3, 5, classes)


C1 = Sublattice((3, 3), (6, 0))           # 5-packing inside the hex 3-packing
A2X3 = Sublattice((6, 2), (12, 0))        # 7-packing inside the hex 3-packing


def _hex_3_catalog(n: int, tail: list[tuple[int, list[int]]]) -> ClassList:
    """n whole copies colored 3, then per-copy subdivisions from ``tail``.

    Each tail entry is (kind_id, values): kind_id 0 -> three 5-packings,
    1 -> four 7-packings.
    """
    base = base_cosets(H, 3)
    classes: ClassList = [(3, [c]) for c in base[:n]]
    for slot, (which, values) in enumerate(tail):
        parent = base[n + slot]
        child = C1 if which == 0 else A2X3
        classes += spread(values, children_of(parent, child))
    return classes


def _hex_3_3() -> Plan:
    classes = _hex_3_catalog(3, [(0, [4, 4, 4]), (0, [5, 5, 5]), (1, [6, 6, 6, 7])])
    return Plan("hex-3-3", H, 3, 3, 13, classes)


def _hex_3_4() -> Plan:
    classes = _hex_3_catalog(4, [(0, [4, 4, 4]), (0, [4, 5, 5])])
    return Plan("hex-3-4", H, 3, 4, 10, classes)


def _hex_3_5() -> Plan:
    classes = _hex_3_catalog(5, [(0, [4, 4, 4])])
    return Plan("hex-3-5", H, 3, 5, 8, classes)


def _hex_3_2() -> Plan:
    base = base_cosets(H, 3)
    classes: ClassList = [(3, [base[0]]), (3, [base[3]])]
    classes += spread([4, 4, 5], children_of(base[2], C1))
    classes += spread([6, 6, 7, 7], children_of(base[5], A2X3))

    # Column construction inside one copy: even columns split into four
    # 9-packings, odd columns into eight 15-packings.
    nine = Sublattice((6, 4), (12, 0))
    fifteen = Sublattice((12, 4), (24, 0))
    o = base[1].offset
    nines = [PackingSpec(H, nine, (o[0] + t[0], o[1] + t[1]))
             for t in [(0, 0), (6, 0), (3, 1), (9, 1)]]
    fifteens = [PackingSpec(H, fifteen, (o[0] + t[0], o[1] + t[1]))
                for t in [(6, 2), (12, 2), (18, 2), (24, 2),
                          (9, 3), (15, 3), (21, 3), (27, 3)]]
    classes += spread([8, 8, 9, 9], nines)
    classes += spread([12, 12, 13, 13, 14, 14, 15, 15], fifteens)

    # Last copy: keep one 5-packing, split one into three 11-packings and
    # one into the mixed 17/23 family.
    fives = children_of(base[4], C1)
    classes.append((5, [fives[0]]))
    eleven = Sublattice((9, 3), (18, 0))
    classes += spread([10, 10, 11], children_of(fives[1], eleven))
    mixed = get_scheme("hex-3.mixed-6k-1-into-18k-1-and-24k-1").instantiate(1)
    shift = (fives[2].offset[0] - mixed.parent.offset[0],
             fives[2].offset[1] - mixed.parent.offset[1])
    mixed_children = [ch.spec.translate(shift) for ch in mixed.children]
    classes += spread([11, 16, 16, 17], mixed_children[:4])
    classes += spread([17, 18, 18, 19, 19, 20], mixed_children[4:])
    return Plan("hex-3-2", H, 3, 2, 35, classes)


A5H = Sublattice((7, 1), (-1, 3))         # 5-packing inside the hex 4-packing
A7H = Sublattice((7, 1), (2, 5))          # 7-packing
A9H = Sublattice((6, 4), (-2, 6))         # 9-packing halving A5H
A11H = Sublattice((14, 2), (-2, 6))       # 11-packing
A14H = Sublattice((9, 6), (-3, 9))        # 14-packing (one-ninth of the 4-packing)
A14H7 = Sublattice((9, 6), (6, 15))       # 14-packing (one-third of A7H)
A19H = Sublattice((12, 8), (-4, 12))      # 19-packing
A23H = Sublattice((24, 16), (-4, 12))     # 23-packing halving A19H


def _hex_4_3() -> Plan:
    base = base_cosets(H, 4)
    classes: ClassList = [(4, [c]) for c in base[:3]]
    classes += spread([5, 5], children_of(base[3], A5H))
    classes += spread([6, 6, 6], children_of(base[4], A7H))
    classes += spread([7, 7, 7], children_of(base[5], A7H))
    fives = children_of(base[6], A5H)
    classes.append((5, [fives[0]]))
    classes += spread([8, 8], children_of(fives[1], A9H))
    fives = children_of(base[7], A5H)
    classes += spread([8, 9], children_of(fives[0], A9H))
    classes += spread([9, 9], children_of(fives[1], A9H))
    elevens = children_of(base[8], A11H)
    classes += spread([10, 10, 10, 11, 11, 11], elevens[:6])
    classes += spread([18, 19], children_of(elevens[6], A19H))
    classes += spread([19, 19], children_of(elevens[7], A19H))
    classes += spread([12, 12, 12, 13, 13, 13, 14, 14, 14],
                      children_of(base[9], A14H))
    nineteens = children_of(base[10], A19H)
    classes += spread([15, 15, 15, 16, 16, 16, 17, 17, 17, 18, 18], nineteens[:11])
    twenty = [20, 20, 20, 21, 21, 21, 22, 22, 22, 23]
    for i, idx in enumerate(range(11, 16)):
        classes += spread(twenty[2 * i:2 * i + 2], children_of(nineteens[idx], A23H))
    return Plan("hex-4-3", H, 4, 3, 58, classes)


def _hex_4_4() -> Plan:
    base = base_cosets(H, 4)
    classes: ClassList = [(4, [c]) for c in base[:4]]
    classes += spread([5, 5], children_of(base[4], A5H))
    classes += spread([5, 5], children_of(base[5], A5H))
    classes += spread([6, 6, 6], children_of(base[6], A7H))
    classes += spread([6, 7, 7], children_of(base[7], A7H))
    for slot, vals in ((8, [8, 8, 8, 8]), (9, [9, 9, 9, 9])):
        fives = children_of(base[slot], A5H)
        nines = children_of(fives[0], A9H) + children_of(fives[1], A9H)
        classes += spread(vals, nines)
    sevens = children_of(base[10], A7H)
    classes += spread([7, 7], sevens[:2])
    classes += spread([10, 10, 10], children_of(sevens[2], A14H7))
    return Plan("hex-4-4", H, 4, 4, 27, classes)


def _hex_4_5() -> Plan:
    base = base_cosets(H, 4)
    classes: ClassList = [(4, [c]) for c in base[:5]]
    classes += spread([5, 5], children_of(base[5], A5H))
    classes += spread([5, 5], children_of(base[6], A5H))
    classes += spread([6, 6, 6], children_of(base[7], A7H))
    classes += spread([6, 6, 7], children_of(base[8], A7H))
    classes += spread([7, 7, 7], children_of(base[9], A7H))
    fives = children_of(base[10], A5H)
    classes.append((5, [fives[0]]))
    classes += spread([7, 8], children_of(fives[1], A9H))
    return Plan("hex-4-5", H, 4, 5, 21, classes)


def _hex_4_6() -> Plan:
    base = base_cosets(H, 4)
    classes: ClassList = [(4, [c]) for c in base[:6]]
    for slot in (6, 7, 8):
        classes += spread([5, 5], children_of(base[slot], A5H))
    for slot in (9, 10):
        classes += spread([6, 6, 6], children_of(base[slot], A7H))
    return Plan("hex-4-6", H, 4, 6, 18, classes)


# -- square plans -------------------------------------------------------------

T3 = Sublattice((4, 2), (1, 3))           # 3-packing halving the square 2-packing
T5 = Sublattice((4, 2), (-2, 4))          # 5-packing quarters
T5B = Sublattice((4, 2), (2, 6))          # 5-packing halving T3
A8S = Sublattice((6, 3), (-3, 6))         # 8-packing (one-ninth)
A11S = Sublattice((3, 9), (-6, 12))       # 11-packing halving A8S
S7 = Sublattice((4, 4), (8, 0))           # 7-packing inside the square 3-packing
S5 = Sublattice((6, 4), (1, 5))           # 5-packing inside the square 4-packing
S9 = Sublattice((6, 4), (-4, 6))          # 9-packing
S9B = Sublattice((6, 4), (2, 10))         # 9-packing halving S5
S11 = Sublattice((12, 8), (2, 10))        # 11-packing (quarter of S5)
S14 = Sublattice((9, 6), (-6, 9))         # 14-packing
S17 = Sublattice((3, 15), (-12, 18))      # 17-packing halving S14


def _sq_2_2() -> Plan:
    base = base_cosets(S, 2)
    classes: ClassList = [(2, [base[0]]), (2, [base[1]])]
    classes += spread([3, 3], children_of(base[2], T3))
    classes += spread([4, 4, 5, 5], children_of(base[3], T5))
    eights = children_of(base[4], A8S)
    classes += spread([6, 6, 7, 7, 8, 8], eights[:6])
    classes += spread([9, 9], children_of(eights[6], A11S))
    classes += spread([10, 10], children_of(eights[7], A11S))
    classes += spread([11, 11], children_of(eights[8], A11S))
    return Plan("square-2-2", S, 2, 2, 20, classes)


def _sq_2_3() -> Plan:
    base = base_cosets(S, 2)
    classes: ClassList = [(2, [c]) for c in base[:3]]
    classes += spread([3, 3], children_of(base[3], T3))
    threes = children_of(base[4], T3)
    classes.append((3, [threes[0]]))
    classes += spread([4, 4], children_of(threes[1], T5B))
    return Plan("square-2-3", S, 2, 3, 8, classes)


def _sq_2_4() -> Plan:
    base = base_cosets(S, 2)
    classes: ClassList = [(2, [c]) for c in base[:4]]
    classes += spread([3, 3], children_of(base[4], T3))
    return Plan("square-2-4", S, 2, 4, 6, classes)


def _sq_3_n(n: int, claimed: int, value_rows: list[list[int]]) -> Plan:
    base = base_cosets(S, 3)
    classes: ClassList = [(3, [c]) for c in base[:8 - len(value_rows)]]
    for slot, vals in enumerate(value_rows):
        classes += spread(vals, children_of(base[8 - len(value_rows) + slot], S7))
    return Plan(f"square-3-{n}", S, 3, n, claimed, classes)


def _sq_4_4() -> Plan:
    base = base_cosets(S, 4)
    classes: ClassList = [(4, [c]) for c in base[:4]]
    classes += spread([5, 5], children_of(base[4], S5))
    classes += spread([5, 5], children_of(base[5], S5))
    for slot, vals in ((6, [6] * 4), (7, [7] * 4), (8, [8] * 4), (9, [9] * 4)):
        classes += spread(vals, children_of(base[slot], S9))
    classes += spread([10, 10, 10, 10, 11, 11, 11, 11], children_of(base[10], S11))
    classes += spread([12, 12, 12, 12, 13, 13, 13, 13, 14],
                      children_of(base[11], S14))
    fourteens = children_of(base[12], S14)
    classes += spread([14, 14], fourteens[:2])
    vals = [15, 15, 15, 15, 16, 16, 16, 16, 17, 17, 17, 17]
    # The remaining one-seventeenth: S14 has nine children, keep index 2 whole.
    classes.append((14, [fourteens[2]]))
    for i, idx in enumerate(range(3, 9)):
        classes += spread(vals[2 * i:2 * i + 2], children_of(fourteens[idx], S17))
    return Plan("square-4-4", S, 4, 4, 56, classes)


def _sq_4_5() -> Plan:
    base = base_cosets(S, 4)
    classes: ClassList = [(4, [c]) for c in base[:5]]
    classes += spread([5, 5], children_of(base[5], S5))
    classes += spread([5, 5], children_of(base[6], S5))
    for slot, vals in ((7, [6] * 4), (8, [6, 7, 7, 7]), (9, [7, 7, 8, 8]),
                       (10, [8, 8, 8, 9])):
        classes += spread(vals, children_of(base[slot], S9))
    fives = children_of(base[11], S5)
    classes.append((5, [fives[0]]))
    classes += spread([9, 9], children_of(fives[1], S9B))
    fives = children_of(base[12], S5)
    classes += spread([9, 9], children_of(fives[0], S9B))
    classes += spread([10, 10, 10, 10], children_of(fives[1], S11))
    return Plan("square-4-5", S, 4, 5, 34, classes)


def _sq_4_6() -> Plan:
    base = base_cosets(S, 4)
    classes: ClassList = [(4, [c]) for c in base[:6]]
    for slot in (6, 7, 8):
        classes += spread([5, 5], children_of(base[slot], S5))
    for slot, vals in ((9, [6] * 4), (10, [6, 6, 7, 7]), (11, [7] * 4),
                       (12, [8] * 4)):
        classes += spread(vals, children_of(base[slot], S9))
    return Plan("square-4-6", S, 4, 6, 28, classes)


# -- triangular plans ---------------------------------------------------------

X3T = BASE_PACKINGS[T][3]                 # 3-packing, also quarters the 1-packing
U5 = Sublattice((4, 2), (-2, 6))          # 5-packing quartering the 2-packing
V5 = Sublattice((6, 6), (6, 0))           # 5-packing inside the tri 3-packing
V7 = Sublattice((4, 4), (12, 0))          # 7-packing
V11 = Sublattice((6, 6), (18, 0))         # 11-packing (one-ninth, also thirds V5)
V11B = Sublattice((12, 12), (12, 0))      # 11-packing (quarter of V5, third of V7)
V15 = Sublattice((8, 8), (24, 0))         # 15-packing
V23 = Sublattice((12, 12), (36, 0))       # 23-packing quartering V11


def _tri_1_2() -> Plan:
    base = base_cosets(T, 1)
    classes: ClassList = [(1, [base[0]]), (1, [base[1]])]
    classes += spread([2, 2, 3, 3], children_of(base[2], X3T))
    return Plan("tri-1-2", T, 1, 2, 6, classes)


def _tri_2_n(n: int, claimed: int, value_rows: list[list[int]]) -> Plan:
    base = base_cosets(T, 2)
    classes: ClassList = [(2, [c]) for c in base[:7 - len(value_rows)]]
    for slot, vals in enumerate(value_rows):
        classes += spread(vals, children_of(base[7 - len(value_rows) + slot], U5))
    return Plan(f"tri-2-{n}", T, 2, n, claimed, classes)


def _tri_3_4() -> Plan:
    base = base_cosets(T, 3)
    classes: ClassList = [(3, [c]) for c in base[:4]]
    classes += spread([4, 4, 5], children_of(base[4], V5))
    classes += spread([4, 4, 5], children_of(base[5], V5))
    classes += spread([6, 6, 6, 6], children_of(base[6], V7))
    classes += spread([7, 7, 7, 7], children_of(base[7], V7))
    values = [[9, 9, 9], [9, 10, 10], [10, 10, 11], [11, 11, 11]]
    for slot, (va, vb) in ((8, (0, 1)), (9, (2, 3))):
        fives = children_of(base[slot], V5)
        classes.append((5, [fives[0]]))
        classes += spread(values[va], children_of(fives[1], V11))
        classes += spread(values[vb], children_of(fives[2], V11))
    classes += spread([12, 12, 12, 12, 13, 13, 13, 13, 14, 14, 14, 14,
                       15, 15, 15, 15], children_of(base[10], V15))
    elevens = children_of(base[11], V11)
    classes += spread([8, 8, 8, 8], elevens[:4])
    vals = [16, 16, 16, 16, 17, 17, 17, 17, 18, 18, 18, 18,
            19, 19, 19, 19, 20, 20, 20, 20]
    for i, idx in enumerate(range(4, 9)):
        classes += spread(vals[4 * i:4 * i + 4], children_of(elevens[idx], V23))
    return Plan("tri-3-4", T, 3, 4, 72, classes)


def _tri_3_5() -> Plan:
    base = base_cosets(T, 3)
    classes: ClassList = [(3, [c]) for c in base[:5]]
    classes += spread([4, 4, 4], children_of(base[5], V5))
    classes += spread([4, 4, 5], children_of(base[6], V5))
    classes += spread([5, 5, 5], children_of(base[7], V5))
    classes += spread([6, 6, 6, 6], children_of(base[8], V7))
    classes += spread([6, 7, 7, 7], children_of(base[9], V7))
    fives = children_of(base[10], V5)
    classes.append((5, [fives[0]]))
    classes += spread([10, 10, 10], children_of(fives[1], V11))
    classes += spread([8, 8, 9, 9], children_of(fives[2], V11B))
    sevens = children_of(base[11], V7)
    classes += spread([7, 7], sevens[:2])
    classes += spread([8, 8, 8], children_of(sevens[2], V11B))
    classes += spread([9, 9, 9], children_of(sevens[3], V11B))
    return Plan("tri-3-5", T, 3, 5, 38, classes)


def _tri_3_6() -> Plan:
    base = base_cosets(T, 3)
    classes: ClassList = [(3, [c]) for c in base[:6]]
    for slot, vals in ((6, [4, 4, 4]), (7, [4, 4, 4]), (8, [5, 5, 5]),
                       (9, [5, 5, 5])):
        classes += spread(vals, children_of(base[slot], V5))
    classes += spread([6, 6, 6, 6], children_of(base[10], V7))
    classes += spread([6, 6, 7, 7], children_of(base[11], V7))
    return Plan("tri-3-6", T, 3, 6, 26, classes)


def plan_catalog() -> list[Plan]:
    """Every shipped plan; claimed color counts are the verified upper bounds."""
    return [
        _bipartition_plan(H), _bipartition_plan(S),
        _hex_2_2(), _hex_2_3(), _whole_lattice_plan(H, 2, 4),
        _hex_3_2(), _hex_3_3(), _hex_3_4(), _hex_3_5(), _whole_lattice_plan(H, 3, 6),
        _hex_4_3(), _hex_4_4(), _hex_4_5(), _hex_4_6(), _whole_lattice_plan(H, 4, 11),
        _sq_2_2(), _sq_2_3(), _sq_2_4(), _whole_lattice_plan(S, 2, 5),
        _sq_3_n(4, 20, [[4] * 4, [5] * 4, [6] * 4, [7] * 4]),
        _sq_3_n(5, 17, [[4] * 4, [5] * 4, [4, 5, 6, 6]]),
        _sq_3_n(6, 14, [[4] * 4, [4, 4, 5, 5]]),
        _whole_lattice_plan(S, 3, 8),
        _sq_4_4(), _sq_4_5(), _sq_4_6(), _whole_lattice_plan(S, 4, 13),
        _tri_1_2(), _whole_lattice_plan(T, 1, 3),
        _tri_2_n(4, 16, [[3] * 4, [4] * 4, [5] * 4]),
        _tri_2_n(5, 13, [[3] * 4, [3, 4, 4, 4]]),
        _tri_2_n(6, 10, [[3] * 4]),
        _whole_lattice_plan(T, 2, 7),
        _tri_3_4(), _tri_3_5(), _tri_3_6(), _whole_lattice_plan(T, 3, 12),
    ]


def get_plan(name: str) -> Plan:
    for p in plan_catalog():
        if p.name == name:
            return p
    raise KeyError(f"unknown plan {name!r}")
