"""The shipped 24x24 pattern: loading, verification, 33-color derivation."""

from __future__ import annotations

import pytest

from latticepack.coloring import verify_grid_coloring
from latticepack.pattern import (SIZE, PatternError, _cells_of_value,
                                 _split_into_packings, _torus_min_distance,
                                 derive_33_coloring, load_pattern,
                                 pattern_grid_coloring, pattern_pipeline)


@pytest.fixture(scope="module")
def grid():
    return load_pattern()


def test_load_shape_and_range(grid):
    assert len(grid) == SIZE and all(len(r) == SIZE for r in grid)
    assert {v for row in grid for v in row} == set(range(1, 18))


def test_value_one_is_half_the_domain(grid):
    ones = _cells_of_value(grid, 1)
    assert len(ones) == SIZE * SIZE // 2
    assert all((a + b) % 2 == 0 for a, b in ones)


def test_load_rejects_bad_files(tmp_path):
    rows = ["1 " * SIZE] * SIZE
    f = tmp_path / "bad_value.txt"
    f.write_text("\n".join(r.replace("1", "0", 1) for r in rows))
    with pytest.raises(PatternError, match="outside 1..17"):
        load_pattern(str(f))

    f = tmp_path / "short_row.txt"
    text = "\n".join((("2 " * (SIZE - 1)).strip() if i == 3 else ("2 " * SIZE).strip())
                     for i in range(SIZE))
    f.write_text(text)
    with pytest.raises(PatternError, match="23"):
        load_pattern(str(f))

    f = tmp_path / "few_rows.txt"
    f.write_text("\n".join(("1 " * SIZE).strip() for _ in range(5)))
    with pytest.raises(PatternError, match="rows"):
        load_pattern(str(f))

    f = tmp_path / "not_int.txt"
    f.write_text("\n".join(("1 " * SIZE).strip() for _ in range(SIZE)).replace("1", "x", 1))
    with pytest.raises(PatternError, match="not an integer"):
        load_pattern(str(f))


def test_pattern_is_17_value_coloring(grid):
    report = verify_grid_coloring(pattern_grid_coloring(grid))
    assert report.ok, str(report)


def test_intermediate_claims(grid):
    assert _torus_min_distance(_cells_of_value(grid, 2)) == 4
    assert _torus_min_distance(_cells_of_value(grid, 3)) == 4
    joint = _cells_of_value(grid, 16) | _cells_of_value(grid, 17)
    assert _torus_min_distance(joint) > 11


def test_split_into_packings_deterministic(grid):
    cells = _cells_of_value(grid, 2)
    a = _split_into_packings(cells, 4, 7)
    b = _split_into_packings(cells, 4, 7)
    assert a == b
    assert all(len(part) == len(cells) // 4 for part in a)
    for part in a:
        assert _torus_min_distance(part) > 7


def test_split_into_packings_impossible():
    cells = {(0, 0), (1, 0), (0, 1), (1, 1)}
    with pytest.raises(PatternError, match="no partition"):
        _split_into_packings(cells, 2, 3)


def test_derived_coloring(grid):
    derived = derive_33_coloring(grid)
    assert derived.color_count == 33
    assert derived.census() == {v: 3 for v in range(3, 14)}
    report = verify_grid_coloring(derived)
    assert report.ok, str(report)


def test_pipeline(grid):
    rep1, rep2, derived = pattern_pipeline()
    assert rep1.ok and rep2.ok
    assert derived.color_count == 33


def test_mutation_is_caught(grid, tmp_path):
    """A transcription error surfaces as a verification failure."""
    mutated = [row[:] for row in grid]
    # Duplicate a rare value close to an existing one of the same value.
    (a, b) = sorted(_cells_of_value(grid, 12))[0]
    mutated[(b + 2) % SIZE][a] = 12
    f = tmp_path / "mutated.txt"
    f.write_text("\n".join(" ".join(map(str, row)) for row in mutated))
    bad = load_pattern(str(f))
    report = verify_grid_coloring(pattern_grid_coloring(bad))
    assert not report.ok
