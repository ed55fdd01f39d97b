"""Planar harmonic mappings with starlike analytic part.

Constructions of class members, closed-form distortion/growth/Jacobian
bounds, and a numerical harness that verifies every bound and probes its
sharpness.
"""

from .bounds import (
    ENVELOPE_QUANTITIES,
    Envelope,
    Quantity,
    coeff_bound_a,
    coeff_bound_b,
    envelope,
    f_growth_upper_tight,
    g_growth_upper_tight,
)
from .maps import (
    DiskMoebius,
    HarmonicMap,
    HerglotzMeasure,
    alexander_down,
    alexander_lift,
    alexander_up,
    blaschke_omega,
    build_harmonic,
    extremal_map,
    koebe,
    moebius_omega,
    polar_grid,
    sample_member,
    starlike_from_measure,
    starlikeness_check,
)
from .series import DEFAULT_ORDER, DEFAULT_R_MAX, DomainError, TruncatedSeries
from .verify import (
    BoundReport,
    SweepSummary,
    Verdict,
    check_point,
    coefficient_audit,
    quadrature_cross_check,
    run_sweep,
    sharpness_scan,
)

__version__ = "0.1.0"

__all__ = [
    "DEFAULT_ORDER",
    "DEFAULT_R_MAX",
    "DomainError",
    "TruncatedSeries",
    "Quantity",
    "Envelope",
    "ENVELOPE_QUANTITIES",
    "envelope",
    "g_growth_upper_tight",
    "f_growth_upper_tight",
    "coeff_bound_a",
    "coeff_bound_b",
    "HerglotzMeasure",
    "DiskMoebius",
    "HarmonicMap",
    "koebe",
    "starlike_from_measure",
    "starlikeness_check",
    "moebius_omega",
    "blaschke_omega",
    "build_harmonic",
    "extremal_map",
    "alexander_up",
    "alexander_down",
    "alexander_lift",
    "polar_grid",
    "sample_member",
    "BoundReport",
    "SweepSummary",
    "Verdict",
    "check_point",
    "coefficient_audit",
    "sharpness_scan",
    "quadrature_cross_check",
    "run_sweep",
]
