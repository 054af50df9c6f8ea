"""The shipped 24x24 square-lattice pattern and its 33-color derivative.

The data file encodes a toroidal 24x24 coloring of the square lattice with
values 1..17 in which every value class is a packing of its value: color 1
is one side of the bipartition and the other values occupy the odd cells.
Loading validates shape and value range (and a checksum catches silent
edits); the packing property itself is re-verified by the callers, so the
data is self-validating end to end.

``derive_33_coloring`` reassigns the pattern's classes to 33 colors whose
values follow the (3, 3) rule.  Writing B_i for the cells of value i and
B'_i for B_i shifted by (1, 0) (the shift carries the odd cells onto the
color-1 cells), the new classes are:

* value 3:  B_2, B_3, B'_3
* value v in 4..8:  B_v, B'_v, and one quarter of B'_2 for v in 4..7;
  the third value-8 color is B_9
* value 9:  B_16 + B_17, B'_16 + B'_17, B'_9
* value 10..13:  B_v, B'_v, and B_14, B'_14, B_15, B'_15 as the third colors

The four quarters of B'_2 are 7-packings found by a deterministic
backtracking split of its conflict graph.  Every step is checked and a
failed intermediate claim raises with the name of the claim.
"""

from __future__ import annotations

import hashlib
from importlib import resources

from .coloring import ColoringReport, GridColoring, verify_grid_coloring
from .density import SequenceSpec
from .lattice import Lattice, Vertex, distance

SIZE = 24
PATTERN_RESOURCE = "pattern_24x24.txt"
PATTERN_SHA256 = "fe7d043653dbfe67fc3cedd8e069c104d46186f7515447e23fa00dee741bc60b"


class PatternError(ValueError):
    pass


def load_pattern(path: str | None = None) -> list[list[int]]:
    """Parse a 24x24 pattern file into grid[b][a]; errors carry line/column."""
    if path is None:
        text = resources.files("latticepack.data").joinpath(PATTERN_RESOURCE).read_text()
        digest = hashlib.sha256(text.encode()).hexdigest()
        if digest != PATTERN_SHA256:
            raise PatternError("shipped pattern file failed its checksum")
    else:
        with open(path, "r", encoding="utf-8") as fh:
            text = fh.read()
    rows: list[list[int]] = []
    lines = [ln for ln in text.splitlines() if ln.strip() and not ln.startswith("#")]
    if len(lines) != SIZE:
        raise PatternError(f"expected {SIZE} rows, found {len(lines)}")
    for lineno, line in enumerate(lines, start=1):
        parts = line.split()
        if len(parts) != SIZE:
            raise PatternError(f"row {lineno}: expected {SIZE} columns, found {len(parts)}")
        row = []
        for col, token in enumerate(parts, start=1):
            try:
                v = int(token)
            except ValueError:
                raise PatternError(f"row {lineno}, column {col}: not an integer") from None
            if not 1 <= v <= 17:
                raise PatternError(f"row {lineno}, column {col}: value {v} outside 1..17")
            row.append(v)
        rows.append(row)
    missing = set(range(1, 18)) - {v for row in rows for v in row}
    if missing:
        raise PatternError(f"values {sorted(missing)} never appear")
    return rows


def pattern_grid_coloring(grid: list[list[int]]) -> GridColoring:
    """View the raw pattern as a 17-color coloring with values 1..17."""
    cells = {(a, b): grid[b][a] - 1 for b in range(SIZE) for a in range(SIZE)}
    return GridColoring("square-1-1-pattern", Lattice.SQUARE,
                        SequenceSpec.explicit(range(1, 18)),
                        list(range(1, 18)), cells, (SIZE, SIZE))


def _cells_of_value(grid: list[list[int]], value: int) -> set[Vertex]:
    return {(a, b) for b in range(SIZE) for a in range(SIZE) if grid[b][a] == value}


def _shift(cells: set[Vertex], t: Vertex) -> set[Vertex]:
    return {((a + t[0]) % SIZE, (b + t[1]) % SIZE) for a, b in cells}


def _torus_min_distance(cells: set[Vertex]) -> int:
    """Min distance between distinct vertices of the periodic extension.

    Values never exceed 17 < 24, so only the nine adjacent period shifts
    can realize the minimum.
    """
    best = None
    shifts = [(da * SIZE, db * SIZE) for da in (-1, 0, 1) for db in (-1, 0, 1)]
    ordered = sorted(cells)
    for i, u in enumerate(ordered):
        for v in ordered[i:]:
            for s in shifts:
                w = (v[0] + s[0], v[1] + s[1])
                if w == u:
                    continue
                d = distance(Lattice.SQUARE, u, w)
                if best is None or d < best:
                    best = d
    if best is None:
        raise ValueError("need at least two vertices")
    return best


def _claim(condition: bool, name: str) -> None:
    if not condition:
        raise PatternError(f"pattern claim failed: {name}")


def _torus_distance(u: Vertex, v: Vertex) -> int:
    shifts = [(da * SIZE, db * SIZE) for da in (-1, 0, 1) for db in (-1, 0, 1)]
    return min(distance(Lattice.SQUARE, u, (v[0] + s[0], v[1] + s[1])) for s in shifts)


def _split_into_packings(cells: set[Vertex], parts: int, radius: int) -> list[set[Vertex]]:
    """Deterministic backtracking partition into ``parts`` radius-packings.

    Vertices are processed in lexicographic order and always receive the
    lowest legal part, backtracking on dead ends, so the result is unique
    for a given input.
    """
    order = sorted(cells)
    conflict: dict[Vertex, list[Vertex]] = {u: [] for u in order}
    for i, u in enumerate(order):
        for v in order[i + 1:]:
            if _torus_distance(u, v) <= radius:
                conflict[u].append(v)
                conflict[v].append(u)
    assign: dict[Vertex, int] = {}

    def backtrack(i: int) -> bool:
        if i == len(order):
            return True
        u = order[i]
        used = {assign[w] for w in conflict[u] if w in assign}
        for c in range(parts):
            if c not in used:
                assign[u] = c
                if backtrack(i + 1):
                    return True
                del assign[u]
        return False

    if not backtrack(0):
        raise PatternError(
            f"no partition of {len(cells)} cells into {parts} {radius}-packings")
    groups: list[set[Vertex]] = [set() for _ in range(parts)]
    for u, c in assign.items():
        groups[c].add(u)
    return groups


def derive_33_coloring(grid: list[list[int]]) -> GridColoring:
    """Reassign the 17-value pattern to a 33-color (3, 3) coloring."""
    B = {i: _cells_of_value(grid, i) for i in range(1, 18)}
    Bp = {i: _shift(B[i], (1, 0)) for i in range(2, 18)}

    _claim(_torus_min_distance(B[2]) > 3, "cells of value 2 form a 3-packing")
    _claim(_torus_min_distance(B[3]) > 3, "cells of value 3 form a 3-packing")
    union = set().union(*(B[i] for i in range(2, 18)))
    _claim(B[1] == _shift(union, (1, 0)),
           "value-1 cells are the other values shifted by (1, 0)")
    _claim(_torus_min_distance(B[16] | B[17]) > 11,
           "values 16 and 17 jointly form an 11-packing")

    quarter_list = _split_into_packings(Bp[2], 4, 7)
    for q in quarter_list:
        _claim(_torus_min_distance(q) > 7, "each quarter of shifted value-2 is a 7-packing")

    classes: list[tuple[int, set[Vertex]]] = [
        (3, B[2]), (3, B[3]), (3, Bp[3]),
        (4, B[4]), (4, Bp[4]), (4, quarter_list[0]),
        (5, B[5]), (5, Bp[5]), (5, quarter_list[1]),
        (6, B[6]), (6, Bp[6]), (6, quarter_list[2]),
        (7, B[7]), (7, Bp[7]), (7, quarter_list[3]),
        (8, B[8]), (8, Bp[8]), (8, B[9]),
        (9, B[16] | B[17]), (9, Bp[16] | Bp[17]), (9, Bp[9]),
        (10, B[10]), (10, Bp[10]), (10, B[14]),
        (11, B[11]), (11, Bp[11]), (11, Bp[14]),
        (12, B[12]), (12, Bp[12]), (12, B[15]),
        (13, B[13]), (13, Bp[13]), (13, Bp[15]),
    ]
    cells: dict[Vertex, int] = {}
    for idx, (_, cs) in enumerate(classes):
        for cell in cs:
            if cell in cells:
                raise PatternError(f"cell {cell} assigned twice in the 33-color derivation")
            cells[cell] = idx
    if len(cells) != SIZE * SIZE:
        raise PatternError("33-color derivation does not cover the domain")
    return GridColoring("square-3-3-pattern", Lattice.SQUARE, SequenceSpec.dn(3, 3),
                        [v for v, _ in classes], cells, (SIZE, SIZE))


def pattern_pipeline(path: str | None = None) -> tuple[ColoringReport, ColoringReport, GridColoring]:
    """Load, verify as (1..17), derive the 33-coloring, verify as (3, 3)."""
    grid = load_pattern(path)
    base = pattern_grid_coloring(grid)
    rep1 = verify_grid_coloring(base)
    derived = derive_33_coloring(grid)
    rep2 = verify_grid_coloring(derived)
    return rep1, rep2, derived
