"""Closed-form two-sided bounds for sense-preserving harmonic maps with
starlike analytic part and |g'(0)| = alpha.

Every displayed inequality of the theory is evaluated here as a pure
function of (alpha, r): distortion of h' and g', the dilatation envelope,
growth of h, g and f, the Jacobian enclosure, and the coefficient bounds.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum

from .series import DEFAULT_R_MAX


class Quantity(str, Enum):
    """Identifiers for bounded quantities (envelopes, audits, lift checks)."""

    H_DERIV = "h_deriv"
    G_DERIV = "g_deriv"
    DILATATION = "dilatation"
    H_GROWTH = "h_growth"
    G_GROWTH = "g_growth"
    F_GROWTH = "f_growth"
    JACOBIAN = "jacobian"
    COEFF_A = "coeff_a"
    COEFF_B = "coeff_b"
    G_VS_H = "g_vs_h"
    LIFT_DERIV = "lift_deriv"


#: The seven pointwise envelope quantities, in report order.
ENVELOPE_QUANTITIES: tuple[Quantity, ...] = (
    Quantity.H_DERIV,
    Quantity.G_DERIV,
    Quantity.DILATATION,
    Quantity.H_GROWTH,
    Quantity.G_GROWTH,
    Quantity.F_GROWTH,
    Quantity.JACOBIAN,
)


@dataclass(frozen=True)
class Envelope:
    """Two-sided bound for one quantity at radius r and class parameter alpha.

    ``lower_clamped`` records that the raw lower formula went negative and
    was clamped to 0 (moduli are nonnegative; the 0-branch of the piecewise
    lower bounds is exactly this clamp).
    """

    quantity: Quantity
    alpha: float
    r: float
    lower: float
    upper: float
    lower_clamped: bool = False


def _check_params(alpha: float, r: float, r_max: float) -> None:
    if not 0.0 <= alpha < 1.0:
        raise ValueError(f"alpha must lie in [0, 1), got {alpha!r}")
    if not 0.0 <= r <= r_max:
        raise ValueError(f"r must lie in [0, {r_max:g}], got {r!r}")


def envelope(quantity: Quantity, alpha: float, r: float,
             r_max: float = DEFAULT_R_MAX) -> Envelope:
    """Evaluate the displayed two-sided bound for one quantity.

    The G_GROWTH and F_GROWTH uppers returned here are the loose algebraic
    forms; the sharp log-form uppers live in :func:`g_growth_upper_tight`
    and :func:`f_growth_upper_tight`.
    """
    _check_params(alpha, r, r_max)
    a = alpha
    clamped = False

    if quantity is Quantity.H_DERIV:
        lower = (1 - r) / (1 + r) ** 3
        upper = (1 + r) / (1 - r) ** 3
    elif quantity is Quantity.G_DERIV:
        raw = (a - r) * (1 - r) / ((1 - a * r) * (1 + r) ** 3)
        lower, clamped = max(raw, 0.0), raw < 0.0
        upper = (a + r) * (1 + r) / ((1 + a * r) * (1 - r) ** 3)
    elif quantity is Quantity.DILATATION:
        raw = (a - r) / (1 - a * r)
        lower, clamped = max(raw, 0.0), raw < 0.0
        upper = (a + r) / (1 + a * r)
    elif quantity is Quantity.H_GROWTH:
        lower = r / (1 + r) ** 2
        upper = r / (1 - r) ** 2
    elif quantity is Quantity.G_GROWTH:
        raw = r * (a - r) / ((1 - a * r) * (1 + r) ** 2)
        lower, clamped = max(raw, 0.0), raw < 0.0
        upper = r * (a + r) / ((1 + a * r) * (1 - r) ** 2)
    elif quantity is Quantity.F_GROWTH:
        lower = (1 - a) * r * (1 - r) / ((1 + a * r) * (1 + r) ** 2)
        upper = (1 + a) * r * (1 + r) / ((1 + a * r) * (1 - r) ** 2)
    elif quantity is Quantity.JACOBIAN:
        lower = (1 - a * a) * (1 - r) ** 3 / ((1 + a * r) ** 2 * (1 + r) ** 5)
        if r < a:
            upper = (1 - a * a) * (1 + r) ** 3 / ((1 - a * r) ** 2 * (1 - r) ** 5)
        else:
            upper = (1 + r) ** 2 / (1 - r) ** 6
    else:
        raise ValueError(f"{quantity.value!r} is not an envelope quantity")

    return Envelope(quantity, a, r, lower, upper, clamped)


def g_growth_upper_tight(alpha: float, r: float, r_max: float = DEFAULT_R_MAX) -> float:
    """Sharp log-form upper bound for |g|, attained by the extremal family:

        ((1-a)/(1+a))^2 log((1+a r)/(1-r)) + r/(1-r)^2 - ((1-a)/(1+a)) 2r/(1-r)
    """
    _check_params(alpha, r, r_max)
    q = (1 - alpha) / (1 + alpha)
    return q * q * math.log((1 + alpha * r) / (1 - r)) + r / (1 - r) ** 2 - q * 2 * r / (1 - r)


def f_growth_upper_tight(alpha: float, r: float, r_max: float = DEFAULT_R_MAX) -> float:
    """Log-form upper bound for |f| (the g bound plus the growth of h):

        ((1-a)/(1+a))^2 log((1+a r)/(1-r)) + 2r/(1-r)^2 - ((1-a)/(1+a)) 2r/(1-r)
    """
    _check_params(alpha, r, r_max)
    q = (1 - alpha) / (1 + alpha)
    return q * q * math.log((1 + alpha * r) / (1 - r)) + 2 * r / (1 - r) ** 2 - q * 2 * r / (1 - r)


def coeff_bound_a(n: int) -> float:
    """Classical coefficient bound |a_n| <= n for the starlike analytic part."""
    if n < 2:
        raise ValueError("coefficient bound applies for n >= 2 (a_1 = 1 is fixed)")
    return float(n)


def coeff_bound_b(n: int, alpha: float) -> float:
    """Class coefficient bound for |b_n|.

    n = 2:   2 alpha + (1 - alpha^2)/2
    n >= 3:  alpha + sqrt((n - alpha^2)(n - 1))

    Both stay strictly below the classical cap n for alpha < 1.
    """
    if n < 2:
        raise ValueError("coefficient bound applies for n >= 2")
    if not 0.0 <= alpha < 1.0:
        raise ValueError(f"alpha must lie in [0, 1), got {alpha!r}")
    if n == 2:
        return 2 * alpha + (1 - alpha * alpha) / 2
    return alpha + math.sqrt((n - alpha * alpha) * (n - 1))
