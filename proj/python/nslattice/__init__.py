"""Exact divisor-class calculus on Neron-Severi lattices of rational surfaces."""

from ._core import (
    DimensionError,
    Error,
    FamilyError,
    InvalidParameterError,
    LatticeCorruptionError,
    NotEffectiveError,
    PreconditionError,
    SurfaceLattice,
    anticanonical_fixed_locus,
    arithmetic_genus,
    basis_change_blf0_to_p2,
    basis_change_f1_to_p2,
    blowup_hirzebruch,
    blowup_p2,
    classify_fixed_component,
    enumerate_negative_rational_classes,
    euler_characteristic,
    fixed_mobile_decompose,
    forced_fixed_components,
    h0_lower_bound,
    hirzebruch,
    intersect,
    is_effective,
    nef_decompose,
    run_cli,
)

__all__ = [name for name in dir() if not name.startswith("_")]
