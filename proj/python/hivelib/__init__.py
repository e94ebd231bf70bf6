"""Combinatorial hives, hive surface geometry, and Littlewood-Richardson
coefficient estimation.

The heavy lifting lives in the compiled extension ``hivelib._core``; this
package re-exports its public surface.
"""

from ._core import (  # noqa: F401
    Hive,
    HiveError,
    ValidationReport,
    WeightTriple,
    build_boundary,
    check_saturation,
    cli,
    curvature,
    embed,
    exact_lrc,
    generate_hive,
    gradient_check,
    lattice_lrc,
    max_lp_hive,
    optimize_coefficient,
    placement,
    polytope,
    rounded_lrc,
    sample_pair,
    spectrum,
    validate_hive,
)

__all__ = [
    "Hive",
    "HiveError",
    "ValidationReport",
    "WeightTriple",
    "build_boundary",
    "check_saturation",
    "cli",
    "curvature",
    "embed",
    "exact_lrc",
    "generate_hive",
    "gradient_check",
    "lattice_lrc",
    "max_lp_hive",
    "optimize_coefficient",
    "placement",
    "polytope",
    "rounded_lrc",
    "sample_pair",
    "spectrum",
    "validate_hive",
]
