"""Verified packings and S-packing colorings of three planar lattices."""

from .lattice import Lattice, ball, ball_size_formula, distance, neighbors, sphere
from .density import (SequenceSpec, area_direct, area_formula,
                      color_count_lower_bound, density_upper_bound,
                      feasibility_certificate)
from .packings import PackingSpec, Sublattice, verify_partition

__all__ = [
    "Lattice", "ball", "ball_size_formula", "distance", "neighbors", "sphere",
    "SequenceSpec", "area_direct", "area_formula", "color_count_lower_bound",
    "density_upper_bound", "feasibility_certificate",
    "PackingSpec", "Sublattice", "verify_partition",
]
