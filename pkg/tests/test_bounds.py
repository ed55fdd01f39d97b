import math

import numpy as np
import pytest

from starharm.bounds import (
    ENVELOPE_QUANTITIES,
    Quantity,
    coeff_bound_a,
    coeff_bound_b,
    envelope,
    f_growth_upper_tight,
    g_growth_upper_tight,
)

ALPHAS = (0.0, 0.25, 0.5, 0.75, 0.9)
RADII = np.linspace(0.0, 0.9, 19)


# -- hand-derived spot values ------------------------------------------------

def test_dilatation_envelope_hand_values():
    # upper (alpha + r)/(1 + alpha r) = 0.8 at alpha = r = 0.5, where the
    # lower formula (alpha - r)/(1 - alpha r) vanishes
    env = envelope(Quantity.DILATATION, 0.5, 0.5)
    assert env.lower == 0.0
    assert math.isclose(env.upper, 0.8, rel_tol=1e-15)
    # away from the seam the lower formula is positive: 0.3/0.9 = 1/3
    env = envelope(Quantity.DILATATION, 0.5, 0.2)
    assert math.isclose(env.lower, 1.0 / 3.0, rel_tol=1e-15)


def test_jacobian_envelope_collapses_at_origin():
    for alpha in ALPHAS:
        env = envelope(Quantity.JACOBIAN, alpha, 0.0)
        assert env.lower == pytest.approx(1.0 - alpha**2, abs=1e-15)
        assert env.upper == pytest.approx(1.0 - alpha**2, abs=1e-15)


def test_dilatation_envelope_collapses_at_origin():
    for alpha in ALPHAS:
        env = envelope(Quantity.DILATATION, alpha, 0.0)
        assert env.lower == env.upper == alpha


def test_h_growth_hand_values():
    env = envelope(Quantity.H_GROWTH, 0.3, 0.5)
    assert math.isclose(env.lower, 0.5 / 2.25, rel_tol=1e-15)
    assert math.isclose(env.upper, 2.0, rel_tol=1e-15)


def test_g_deriv_lower_vanishes_past_alpha():
    env = envelope(Quantity.G_DERIV, 0.3, 0.5)
    assert env.lower == 0.0
    assert env.lower_clamped


def test_g_deriv_lower_positive_inside_alpha():
    # (alpha - r)(1 - r) / ((1 - alpha r)(1 + r)^3) at alpha=0.5, r=0.25
    env = envelope(Quantity.G_DERIV, 0.5, 0.25)
    expected = (0.25 * 0.75) / (0.875 * 1.25**3)
    assert math.isclose(env.lower, expected, rel_tol=1e-15)
    assert not env.lower_clamped


def test_envelope_rejects_out_of_range_parameters():
    with pytest.raises(ValueError):
        envelope(Quantity.H_DERIV, 1.0, 0.5)
    with pytest.raises(ValueError):
        envelope(Quantity.H_DERIV, 0.5, 0.95)
    with pytest.raises(ValueError):
        envelope(Quantity.H_DERIV, -0.1, 0.5)
    with pytest.raises(ValueError):
        envelope(Quantity.COEFF_A, 0.5, 0.5)


# -- tight growth uppers -----------------------------------------------------

def test_g_growth_tight_hand_value():
    # alpha=0: log(1/(1-r)) + r/(1-r)^2 - 2r/(1-r); at r=0.5 this is log 2
    assert math.isclose(g_growth_upper_tight(0.0, 0.5), math.log(2.0), rel_tol=1e-15)


def test_f_growth_tight_hand_value():
    assert math.isclose(f_growth_upper_tight(0.0, 0.5), math.log(2.0) + 2.0,
                        rel_tol=1e-15)


def test_tight_uppers_vanish_at_origin():
    for alpha in ALPHAS:
        assert g_growth_upper_tight(alpha, 0.0) == 0.0
        assert f_growth_upper_tight(alpha, 0.0) == 0.0


@pytest.mark.parametrize("alpha", [0.25, 0.5])
def test_tight_upper_below_loose_upper(alpha):
    for r in np.arange(0.1, 0.85, 0.1):
        loose_g = envelope(Quantity.G_GROWTH, alpha, r).upper
        loose_f = envelope(Quantity.F_GROWTH, alpha, r).upper
        assert g_growth_upper_tight(alpha, r) <= loose_g + 1e-15
        assert f_growth_upper_tight(alpha, r) <= loose_f + 1e-15


# -- coefficient bounds --------------------------------------------------------

def test_coeff_bound_a_values_and_domain():
    assert coeff_bound_a(2) == 2.0
    assert coeff_bound_a(5) == 5.0
    with pytest.raises(ValueError):
        coeff_bound_a(1)


def test_coeff_bound_b_hand_values():
    assert math.isclose(coeff_bound_b(2, 0.0), 0.5, rel_tol=1e-15)
    assert math.isclose(coeff_bound_b(2, 0.5), 1.375, rel_tol=1e-15)
    assert math.isclose(coeff_bound_b(3, 0.0), math.sqrt(6.0), rel_tol=1e-15)


def test_coeff_bound_b_specializes_at_alpha_zero():
    assert coeff_bound_b(2, 0.0) == 0.5
    for n in range(3, 12):
        assert coeff_bound_b(n, 0.0) == math.sqrt(n * (n - 1))


def test_coeff_bound_b_stays_below_classical_cap():
    for alpha in ALPHAS:
        for n in range(2, 20):
            assert coeff_bound_b(n, alpha) < n


def test_coeff_bound_b_rejects_bad_input():
    with pytest.raises(ValueError):
        coeff_bound_b(1, 0.5)
    with pytest.raises(ValueError):
        coeff_bound_b(3, 1.0)


# -- structural invariants -----------------------------------------------------

def test_lower_never_exceeds_upper():
    for quantity in ENVELOPE_QUANTITIES:
        for alpha in ALPHAS:
            for r in RADII:
                env = envelope(quantity, alpha, float(r))
                assert 0.0 <= env.lower <= env.upper
                assert math.isfinite(env.upper)


def test_upper_bounds_monotone_in_r():
    for quantity in ENVELOPE_QUANTITIES:
        for alpha in ALPHAS:
            uppers = [envelope(quantity, alpha, float(r)).upper for r in RADII]
            diffs = np.diff(uppers)
            assert np.all(diffs >= -1e-12), (quantity, alpha)


def test_tight_uppers_monotone_in_r():
    for alpha in ALPHAS:
        tg = [g_growth_upper_tight(alpha, float(r)) for r in RADII]
        tf = [f_growth_upper_tight(alpha, float(r)) for r in RADII]
        assert np.all(np.diff(tg) >= -1e-12)
        assert np.all(np.diff(tf) >= -1e-12)


@pytest.mark.parametrize("alpha", [0.25, 0.5, 0.75])
def test_piecewise_seam_continuity(alpha):
    # lower bounds: branch formula hits exactly 0 at the seam
    for quantity in (Quantity.G_DERIV, Quantity.G_GROWTH):
        at_seam = envelope(quantity, alpha, alpha).lower
        below = envelope(quantity, alpha, math.nextafter(alpha, 0.0)).lower
        assert abs(at_seam) <= 1e-12
        assert abs(below - at_seam) <= 1e-12
    # Jacobian upper: both branch formulas agree at r = alpha
    at_seam = envelope(Quantity.JACOBIAN, alpha, alpha).upper
    below = envelope(Quantity.JACOBIAN, alpha, math.nextafter(alpha, 0.0)).upper
    assert abs(below - at_seam) / at_seam <= 1e-12
