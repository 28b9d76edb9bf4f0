"""Integral Clifford modules, H-type structure constants and lattice growth.

Python indices are 0-based; exported JSON and CSV are 1-based.
Group coordinates come back as fractions.Fraction.
"""

from ._core import (
    CapExceeded,
    GradedRep,
    SignedPerm,
    StructTensor,
    UngradedRep,
    admissible_variants,
    ball_count,
    build_graded,
    dims,
    extract_irreducible,
    group_commutator,
    group_inverse,
    group_mul,
    growth_degree,
    loglog_slope,
    omega,
    omega_graded,
    plus_minus_iso,
    reduce,
    structure_constants,
    subgroup_index,
    to_json,
    verify,
    verify_clifford,
    verify_htype,
    verify_json,
)

__all__ = [name for name in dir() if not name.startswith("_")]
