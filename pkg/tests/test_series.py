import math

import numpy as np
import pytest

from starharm.series import DomainError, TruncatedSeries


def geometric(order):
    """1/(1-z): all coefficients 1."""
    return TruncatedSeries(np.ones(order + 1))


def koebe_series(order):
    """z/(1-z)^2: coefficient n at z^n."""
    return TruncatedSeries(np.arange(order + 1, dtype=float))


def random_series(rng, order):
    re = rng.standard_normal(order + 1)
    im = rng.standard_normal(order + 1)
    return TruncatedSeries(re + 1j * im)


# -- construction ----------------------------------------------------------

def test_order_matches_length():
    s = TruncatedSeries([1.0, 2.0, 3.0])
    assert s.order == 2
    assert len(s.coeffs) == s.order + 1


def test_order_argument_pads_and_cuts():
    s = TruncatedSeries([1.0, 2.0], order=4)
    assert s.order == 4
    assert s.coeff(3) == 0
    t = TruncatedSeries([1.0, 2.0, 3.0], order=1)
    assert t.order == 1 and t.coeff(1) == 2.0


def test_coeffs_are_immutable():
    s = TruncatedSeries([1.0, 2.0])
    with pytest.raises(ValueError):
        s.coeffs[0] = 5.0


# -- evaluate ----------------------------------------------------------------

def test_evaluate_at_origin_constant_term():
    v, tail = geometric(64).evaluate(0.0)
    assert v == 1.0
    assert tail == 0.0


def test_evaluate_koebe_closed_form():
    # z/(1-z)^2 at 0.5 equals 0.5/0.25 = 2
    v, tail = koebe_series(64).evaluate(0.5)
    assert abs(v - 2.0) <= tail + 1e-12


def test_evaluate_outside_rmax_is_domain_error():
    with pytest.raises(DomainError):
        geometric(16).evaluate(0.95)
    with pytest.raises(DomainError):
        geometric(16).evaluate(0.95j, r_max=0.9)


def test_evaluate_matches_power_sum_inside_half_disc():
    rng = np.random.default_rng(7)
    s = random_series(rng, 48)
    for _ in range(20):
        z = complex(*rng.uniform(-0.35, 0.35, 2))
        direct = sum(c * z**n for n, c in enumerate(s.coeffs.tolist()))
        v, _ = s.evaluate(z)
        assert abs(v - direct) < 1e-12


def test_evaluate_vectorized_agrees_with_scalar():
    s = koebe_series(32)
    zs = np.array([0.1, 0.2 + 0.3j, -0.5j])
    vals, tails = s.evaluate(zs)
    for z, v, t in zip(zs.tolist(), vals.tolist(), tails.tolist()):
        sv, st = s.evaluate(z)
        # scalar path runs in Python complex, vector path in numpy; they may
        # differ in the last ulp
        assert abs(v - sv) <= 1e-15 * (1.0 + abs(sv))
        assert math.isclose(t, st, rel_tol=1e-12, abs_tol=1e-300)


@pytest.mark.parametrize("make,closed", [
    (geometric, lambda z: 1.0 / (1.0 - z)),
    (koebe_series, lambda z: z / (1.0 - z) ** 2),
])
def test_tail_bound_is_a_true_bound(make, closed):
    s = make(64)
    for radius in (0.3, 0.6, 0.9):
        for angle in (0.0, 1.0, 2.5, 4.0):
            z = radius * np.exp(1j * angle)
            v, tail = s.evaluate(z)
            assert abs(closed(z) - v) <= tail + 1e-15


# -- ring operations -------------------------------------------------------

def test_add_and_scale_trivials():
    one_plus = TruncatedSeries([1.0, 1.0])
    one_minus = TruncatedSeries([1.0, -1.0])
    total = one_plus + one_minus
    assert np.allclose(total.coeffs, [2.0, 0.0])
    assert np.allclose((one_plus * 0.0).coeffs, 0.0)
    s = koebe_series(8)
    cancelled = s + s * (-1.0)
    assert np.allclose(cancelled.coeffs, 0.0)


def test_add_truncates_to_smaller_order():
    a = geometric(8)
    b = geometric(4)
    assert (a + b).order == 4


def test_mul_difference_of_squares():
    prod = TruncatedSeries([1.0, 1.0], order=4) * TruncatedSeries([1.0, -1.0], order=4)
    assert np.allclose(prod.coeffs, [1.0, 0.0, -1.0, 0.0, 0.0])


def test_mul_geometric_squared_is_koebe_shifted():
    # convolution of two all-ones sequences: coefficient n of 1/(1-z)^2 is n+1
    prod = geometric(5) * geometric(5)
    assert np.allclose(prod.coeffs, [1, 2, 3, 4, 5, 6])


def test_mul_by_unit_constant_is_identity():
    s = koebe_series(12)
    same = s * TruncatedSeries([1.0], order=12)
    assert np.allclose(same.coeffs, s.coeffs)


def test_ring_axioms_on_random_series():
    rng = np.random.default_rng(123)
    for _ in range(5):
        a = random_series(rng, 32)
        b = random_series(rng, 32)
        c = random_series(rng, 32)
        assert np.allclose((a * b).coeffs, (b * a).coeffs, atol=1e-12)
        assert np.allclose(((a * b) * c).coeffs, (a * (b * c)).coeffs, atol=1e-12)
        assert np.allclose((a * (b + c)).coeffs, (a * b + a * c).coeffs, atol=1e-12)


# -- calculus ----------------------------------------------------------------

def test_derivative_of_square():
    d = TruncatedSeries([0.0, 0.0, 1.0]).derivative()
    assert np.allclose(d.coeffs, [0.0, 2.0])


def test_antiderivative_of_constant():
    a = TruncatedSeries([1.0]).antiderivative0()
    assert np.allclose(a.coeffs, [0.0, 1.0])


@pytest.mark.parametrize("order", [4, 16, 32])
def test_derivative_antiderivative_roundtrip_on_koebe(order):
    s = koebe_series(order)
    back = s.derivative().antiderivative0()
    assert np.max(np.abs(back.coeffs - s.coeffs)) < 1e-12  # s has no constant term


def test_antiderivative_then_derivative_is_identity():
    rng = np.random.default_rng(5)
    s = random_series(rng, 24)
    back = s.antiderivative0().derivative()
    assert np.max(np.abs(back.coeffs - s.coeffs)) < 1e-14


# -- composition, reciprocal, exp --------------------------------------------

def test_compose_geometric_with_square():
    # z/(1-z) composed with z^2 gives z^2/(1-z^2): ones at even powers >= 2
    outer = TruncatedSeries(np.concatenate([[0.0], np.ones(8)]))
    inner = TruncatedSeries([0.0, 0.0, 1.0], order=8)
    comp = outer.compose0(inner)
    expected = np.array([0, 0, 1, 0, 1, 0, 1, 0, 1], dtype=float)
    assert np.allclose(comp.coeffs, expected, atol=1e-12)


def test_compose_with_identity_inner():
    s = koebe_series(10)
    ident = TruncatedSeries([0.0, 1.0], order=10)
    assert np.allclose(s.compose0(ident).coeffs, s.coeffs)


def test_compose_rejects_nonzero_inner_constant():
    with pytest.raises(ValueError):
        geometric(4).compose0(TruncatedSeries([0.1, 1.0], order=4))


def test_reciprocal_of_one_minus_z():
    r = TruncatedSeries([1.0, -1.0], order=10).reciprocal()
    assert np.allclose(r.coeffs, 1.0)


def test_reciprocal_is_multiplicative_inverse():
    rng = np.random.default_rng(11)
    s = random_series(rng, 16)
    s = TruncatedSeries(np.concatenate([[2.0 + 0.5j], s.coeffs[1:]]))
    unit = s * s.reciprocal()
    expected = np.zeros(17)
    expected[0] = 1.0
    assert np.allclose(unit.coeffs, expected, atol=1e-12)


def test_reciprocal_rejects_vanishing_constant():
    with pytest.raises(ValueError):
        TruncatedSeries([0.0, 1.0]).reciprocal()


def test_exp_of_z_is_exponential_series():
    e = TruncatedSeries([0.0, 1.0], order=8).exp0()
    expected = [1.0 / math.factorial(n) for n in range(9)]
    assert np.allclose(e.coeffs, expected)


def test_exp_of_minus_log_one_minus_z():
    # -log(1-z) = sum z^n/n, and exp of it recovers 1/(1-z)
    order = 64
    n = np.arange(1, order + 1)
    s = TruncatedSeries(np.concatenate([[0.0], 1.0 / n]))
    e = s.exp0()
    assert np.max(np.abs(e.coeffs - 1.0)) < 1e-12


def test_exp_rejects_nonzero_constant():
    with pytest.raises(ValueError):
        TruncatedSeries([0.5, 1.0]).exp0()
