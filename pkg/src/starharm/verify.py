"""Numerical verification harness.

Pointwise envelope checks, coefficient audits, sharpness scans against the
extremal family, a quadrature cross-check of the series reconstruction of
g, and a seeded sweep over random class members.  A failed inequality is a
report, never an exception: sweeps always run to completion.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from functools import lru_cache

import numpy as np

from . import bounds, maps
from .bounds import ENVELOPE_QUANTITIES, Quantity
from .series import DEFAULT_ORDER, DEFAULT_R_MAX

#: Relative slack applied to upper bounds; separates genuine violations
#: from floating-point noise.
DEFAULT_SLACK_REL = 1e-7

#: Absolute comparison floor added on top of the certified tail bound.
SLACK_ABS_FLOOR = 1e-12


class Verdict(str, Enum):
    PASS = "PASS"
    FAIL = "FAIL"


@dataclass(frozen=True)
class BoundReport:
    """One verified inequality: lower <= value <= upper, up to slack.

    ``slack`` is the absolute allowance (certified series tail plus floor);
    upper bounds additionally receive the relative slack of the run.  ``z``
    is set for pointwise checks, ``n`` for coefficient audits.
    """

    quantity: Quantity
    alpha: float
    lower: float
    value: float
    upper: float
    slack: float
    verdict: Verdict
    z: complex | None = None
    n: int | None = None
    note: str = ""


@dataclass
class SweepSummary:
    """Aggregate of one verification sweep.

    ``sharpness`` maps quantity names to the largest observed value/upper
    ratio and the smallest value/lower ratio (over reports with a positive
    lower bound).
    """

    seed: int
    member_count: int
    points_per_member: int
    reports_total: int
    reports_failed: int
    worst_margin: float
    sharpness: dict[str, dict[str, float | None]]

    def to_dict(self) -> dict:
        return {
            "seed": self.seed,
            "member_count": self.member_count,
            "points_per_member": self.points_per_member,
            "reports_total": self.reports_total,
            "reports_failed": self.reports_failed,
            "worst_margin": self.worst_margin,
            "sharpness": {k: dict(v) for k, v in sorted(self.sharpness.items())},
        }


def _report(quantity: Quantity, alpha: float, lower: float, value: float,
            upper: float, slack_abs: float, slack_rel: float,
            z: complex | None = None, n: int | None = None,
            note: str = "") -> BoundReport:
    ok = (value >= lower - slack_abs) and (value <= upper * (1.0 + slack_rel) + slack_abs)
    return BoundReport(quantity, alpha, lower, value, upper, slack_abs,
                       Verdict.PASS if ok else Verdict.FAIL, z=z, n=n, note=note)


def _margin(rep: BoundReport, slack_rel: float) -> float:
    if not math.isfinite(rep.value):
        return float("-inf")
    low_side = rep.value - (rep.lower - rep.slack)
    high_side = rep.upper * (1.0 + slack_rel) + rep.slack - rep.value
    return min(low_side, high_side)


def check_point(m: maps.HarmonicMap, z: complex,
                slack_rel: float = DEFAULT_SLACK_REL,
                r_max: float = DEFAULT_R_MAX) -> list[BoundReport]:
    """Verify all seven displayed envelopes at one point.

    Values come from the truncated series of the member; bounds from the
    closed forms at r = |z| (tight log-form uppers for the g and f growth).
    The absolute slack of each report is the propagated certified tail
    bound at the point plus the comparison floor.
    """
    z = complex(z)
    r = abs(z)
    alpha = m.alpha
    reports: list[BoundReport] = []

    hv, th = m.h.evaluate(z, r_max)
    gv, tg = m.g.evaluate(z, r_max)
    hp, thp = m.h_prime.evaluate(z, r_max)
    gp, tgp = m.g_prime.evaluate(z, r_max)
    env = {q: bounds.envelope(q, alpha, r, r_max) for q in ENVELOPE_QUANTITIES}

    def add(q, lower, value, upper, err, note=""):
        reports.append(_report(q, alpha, lower, value, upper,
                               err + SLACK_ABS_FLOOR, slack_rel, z=z, note=note))

    e = env[Quantity.H_DERIV]
    add(Quantity.H_DERIV, e.lower, abs(hp), e.upper, thp)

    e = env[Quantity.G_DERIV]
    add(Quantity.G_DERIV, e.lower, abs(gp), e.upper, tgp)

    e = env[Quantity.DILATATION]
    denom = abs(hp) - thp
    value = abs(gp) / abs(hp) if abs(hp) > 0 else float("inf")
    if denom > 0.0:
        add(Quantity.DILATATION, e.lower, value, e.upper, (tgp + value * thp) / denom)
    else:
        reports.append(BoundReport(
            Quantity.DILATATION, alpha, e.lower, value, e.upper, 0.0,
            Verdict.FAIL, z=z,
            note="series tail exceeds |h'| here; dilatation value uncertified"))

    e = env[Quantity.H_GROWTH]
    add(Quantity.H_GROWTH, e.lower, abs(hv), e.upper, th)

    e = env[Quantity.G_GROWTH]
    add(Quantity.G_GROWTH, e.lower, abs(gv),
        bounds.g_growth_upper_tight(alpha, r, r_max), tg)

    e = env[Quantity.F_GROWTH]
    add(Quantity.F_GROWTH, e.lower, abs(hv + gv.conjugate()),
        bounds.f_growth_upper_tight(alpha, r, r_max), th + tg)

    e = env[Quantity.JACOBIAN]
    jac_err = 2 * abs(hp) * thp + thp**2 + 2 * abs(gp) * tgp + tgp**2
    add(Quantity.JACOBIAN, e.lower, abs(hp) ** 2 - abs(gp) ** 2, e.upper, jac_err)

    return reports


def coefficient_audit(m: maps.HarmonicMap, n_max: int = 16,
                      slack_rel: float = DEFAULT_SLACK_REL) -> list[BoundReport]:
    """Audit |b_1| = alpha, |a_n| <= n, |b_n| against the class bound, and
    the classical cap |b_n| < n, for 2 <= n <= n_max."""
    if n_max < 2:
        raise ValueError("n_max must be >= 2")
    n_max = min(n_max, m.h.order, m.g.order)
    alpha = m.alpha
    out: list[BoundReport] = []
    b1 = abs(m.g.coeff(1))
    out.append(_report(Quantity.COEFF_B, alpha, alpha, b1, alpha,
                       SLACK_ABS_FLOOR, slack_rel, n=1, note="|b_1| = alpha"))
    for n in range(2, n_max + 1):
        out.append(_report(Quantity.COEFF_A, alpha, 0.0, abs(m.h.coeff(n)),
                           bounds.coeff_bound_a(n), SLACK_ABS_FLOOR, slack_rel, n=n))
        bn = abs(m.g.coeff(n))
        out.append(_report(Quantity.COEFF_B, alpha, 0.0, bn,
                           bounds.coeff_bound_b(n, alpha), SLACK_ABS_FLOOR,
                           slack_rel, n=n))
        out.append(_report(Quantity.COEFF_B, alpha, 0.0, bn, float(n),
                           SLACK_ABS_FLOOR, slack_rel, n=n, note="classical cap"))
    return out


def _achieved_and_bound(m: maps.HarmonicMap, quantity: Quantity, alpha: float,
                        r: float, r_max: float) -> tuple[float, float]:
    z = complex(r)
    if quantity is Quantity.G_GROWTH:
        return abs(m.g.evaluate(z, r_max)[0]), bounds.g_growth_upper_tight(alpha, r, r_max)
    if quantity is Quantity.F_GROWTH:
        return abs(m.eval_f(z, r_max)), bounds.f_growth_upper_tight(alpha, r, r_max)
    upper = bounds.envelope(quantity, alpha, r, r_max).upper
    if quantity is Quantity.H_DERIV:
        return abs(m.h_prime.evaluate(z, r_max)[0]), upper
    if quantity is Quantity.G_DERIV:
        return abs(m.g_prime.evaluate(z, r_max)[0]), upper
    if quantity is Quantity.DILATATION:
        return abs(m.eval_dilatation(z, r_max)), upper
    if quantity is Quantity.H_GROWTH:
        return abs(m.h.evaluate(z, r_max)[0]), upper
    if quantity is Quantity.JACOBIAN:
        return float(m.eval_jacobian(z, r_max)), upper
    raise ValueError(f"{quantity.value!r} has no pointwise sharpness scan")


def sharpness_scan(quantity: Quantity, alpha: float, values,
                   order: int = DEFAULT_ORDER,
                   r_max: float = DEFAULT_R_MAX) -> list[tuple[float, float]]:
    """Achieved-to-bound ratios for the extremal member along the real axis.

    ``values`` are radii in (0, r_max] for the pointwise quantities and
    coefficient indices (>= 2) for COEFF_A / COEFF_B.  Ratios hit 1 where a
    bound is attained (tight g growth, dilatation upper, ...) and are merely
    reported for the bounds that are not expected to be precise.
    """
    m = maps.extremal_map(alpha, order)
    out: list[tuple[float, float]] = []
    if quantity in (Quantity.COEFF_A, Quantity.COEFF_B):
        for v in values:
            n = int(v)
            if quantity is Quantity.COEFF_A:
                ratio = abs(m.h.coeff(n)) / bounds.coeff_bound_a(n)
            else:
                ratio = abs(m.g.coeff(n)) / bounds.coeff_bound_b(n, alpha)
            out.append((float(n), ratio))
        return out
    for v in values:
        r = float(v)
        if not 0.0 < r <= r_max:
            raise ValueError(f"scan radius must lie in (0, {r_max:g}], got {r!r}")
        value, bound = _achieved_and_bound(m, quantity, alpha, r, r_max)
        out.append((r, value / bound))
    return out


@lru_cache(maxsize=8)
def _leggauss(nodes: int) -> tuple[np.ndarray, np.ndarray]:
    return np.polynomial.legendre.leggauss(nodes)


def quadrature_cross_check(m: maps.HarmonicMap, z: complex,
                           segments: int = 4, nodes: int = 32,
                           r_max: float = DEFAULT_R_MAX):
    """g(z) from the coefficient route vs quadrature of g' along [0, z].

    Composite Gauss-Legendre (``segments`` panels of ``nodes`` nodes) has
    spectral accuracy here, far below the verification slack, so the two
    routes cross-validate each other.

    Returns:
        (series_value, quadrature_value, absolute difference).
    """
    z = complex(z)
    if abs(z) > 0.8 + 1e-12:
        raise ValueError("cross-check certified for |z| <= 0.8")
    series_value, _ = m.g.evaluate(z, r_max)
    x, w = _leggauss(nodes)
    total = 0j
    for k in range(segments):
        lo = k / segments
        hi = (k + 1) / segments
        s = 0.5 * (hi - lo) * x + 0.5 * (hi + lo)
        gp, _ = m.g_prime.evaluate(s * z, r_max)
        total += 0.5 * (hi - lo) * np.dot(w, gp)
    quad = complex(total * z)
    return series_value, quad, abs(series_value - quad)


def _pointwise_moduli_reports(member: maps.HarmonicMap,
                              lift: maps.HarmonicMap | None, z: complex,
                              slack_rel: float, r_max: float,
                              lift_note: str) -> list[BoundReport]:
    """|g(z)| < |h(z)| and the lift check |G'(z)| < |H'(z)|."""
    alpha = member.alpha
    hv, th = member.h.evaluate(z, r_max)
    gv, tg = member.g.evaluate(z, r_max)
    reps = [_report(Quantity.G_VS_H, alpha, 0.0, abs(gv), abs(hv),
                    tg + th + SLACK_ABS_FLOOR, slack_rel, z=z)]
    if lift is None:
        reps.append(BoundReport(Quantity.LIFT_DERIV, alpha, 0.0, float("inf"),
                                0.0, 0.0, Verdict.FAIL, z=z, note=lift_note))
    else:
        hpv, thp = lift.h_prime.evaluate(z, r_max)
        gpv, tgp = lift.g_prime.evaluate(z, r_max)
        reps.append(_report(Quantity.LIFT_DERIV, alpha, 0.0, abs(gpv), abs(hpv),
                            tgp + thp + SLACK_ABS_FLOOR, slack_rel, z=z))
    return reps


def run_sweep(seed: int, member_count: int, points_per_member: int,
              order: int = DEFAULT_ORDER, n_audit: int = 16,
              slack_rel: float = DEFAULT_SLACK_REL,
              r_max: float = DEFAULT_R_MAX,
              grid: np.ndarray | None = None) -> SweepSummary:
    """Sweep seeded random members against every bound.

    Per member: the seven envelope checks and the two pointwise modulus
    comparisons at ``points_per_member`` random points with |z| <= r_max,
    plus one coefficient audit.  Failures are counted in the summary, never
    raised, and the whole run is deterministic in (seed, config).
    """
    if member_count < 1:
        raise ValueError("member_count must be >= 1")
    if points_per_member < 1:
        raise ValueError("points_per_member must be >= 1")
    rng = np.random.default_rng(seed)
    if grid is None:
        grid = maps.default_grid()

    total = failed = 0
    worst = math.inf
    max_vs_upper: dict[str, float] = {}
    min_vs_lower: dict[str, float] = {}

    for _ in range(member_count):
        member, _info = maps.sample_member(rng, order, grid)
        radii = rng.uniform(0.0, r_max, points_per_member)
        angs = rng.uniform(0.0, 2.0 * math.pi, points_per_member)
        zs = radii * np.exp(1j * angs)

        lift: maps.HarmonicMap | None
        try:
            lift = maps.alexander_lift(member, grid)
            lift_note = ""
        except ValueError as exc:  # would falsify the lift theorem
            lift = None
            lift_note = f"lift rejected: {exc}"

        reports = coefficient_audit(member, n_audit, slack_rel)
        for z in zs.tolist():
            reports.extend(check_point(member, z, slack_rel, r_max))
            reports.extend(_pointwise_moduli_reports(member, lift, z,
                                                     slack_rel, r_max, lift_note))

        for rep in reports:
            total += 1
            if rep.verdict is Verdict.FAIL:
                failed += 1
            worst = min(worst, _margin(rep, slack_rel))
            name = rep.quantity.value
            if rep.upper > 1e-15 and math.isfinite(rep.value):
                ratio = rep.value / rep.upper
                if ratio > max_vs_upper.get(name, float("-inf")):
                    max_vs_upper[name] = ratio
            if rep.lower > 1e-15 and math.isfinite(rep.value):
                ratio = rep.value / rep.lower
                if ratio < min_vs_lower.get(name, float("inf")):
                    min_vs_lower[name] = ratio

    sharpness = {
        name: {
            "max_vs_upper": max_vs_upper.get(name),
            "min_vs_lower": min_vs_lower.get(name),
        }
        for name in sorted(set(max_vs_upper) | set(min_vs_lower))
    }
    return SweepSummary(
        seed=seed,
        member_count=member_count,
        points_per_member=points_per_member,
        reports_total=total,
        reports_failed=failed,
        worst_margin=worst,
        sharpness=sharpness,
    )
