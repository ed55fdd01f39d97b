"""Constructions of locally injective, sense-preserving planar harmonic maps
f = h + conj(g) whose analytic part h is starlike.

Starlike parts are generated from atomic circle measures, dilatations from
disc automorphisms or Blaschke products, and the two pictures (starlike h
vs convex H) are linked by the Alexander transform.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .series import DEFAULT_ORDER, DEFAULT_R_MAX, TruncatedSeries

_TWO_PI = 2.0 * math.pi
_NORM_TOL = 1e-12

_DEFAULT_GRID: np.ndarray | None = None


def polar_grid(radii: int = 24, angles: int = 72,
               r_max: float = DEFAULT_R_MAX) -> np.ndarray:
    """Sample points r_j e^{i t_k}, j = 1..radii, k = 0..angles-1.

    The origin is excluded; admission checks and starlikeness scans run on
    this grid by default.
    """
    if radii < 1 or angles < 1:
        raise ValueError("grid needs at least one radius and one angle")
    r = r_max * np.arange(1, radii + 1) / radii
    t = _TWO_PI * np.arange(angles) / angles
    return (r[:, None] * np.exp(1j * t)[None, :]).ravel()


def default_grid() -> np.ndarray:
    """The shared 24 x 72 polar admission grid (built once)."""
    global _DEFAULT_GRID
    if _DEFAULT_GRID is None:
        _DEFAULT_GRID = polar_grid()
    return _DEFAULT_GRID


def _require_normalized(h: TruncatedSeries) -> None:
    if abs(h.coeff(0)) > _NORM_TOL or abs(h.coeff(1) - 1.0) > _NORM_TOL:
        raise ValueError("analytic part must satisfy h(0) = 0 and h'(0) = 1")


@dataclass(frozen=True)
class HerglotzMeasure:
    """Finite atomic probability measure on the unit circle.

    ``atoms`` holds (angle, weight) pairs; weights are positive and sum to 1.
    Such a measure generates a positive-real-part function and hence a
    starlike h via :func:`starlike_from_measure`.
    """

    atoms: tuple[tuple[float, float], ...]

    def __post_init__(self):
        if len(self.atoms) == 0:
            raise ValueError("measure needs at least one atom")
        weights = [w for _, w in self.atoms]
        if any(w <= 0.0 for w in weights):
            raise ValueError("atom weights must be positive")
        if abs(sum(weights) - 1.0) > 1e-12:
            raise ValueError("atom weights must sum to 1")

    @classmethod
    def from_atoms(cls, angles, weights) -> HerglotzMeasure:
        """Build a measure from raw positive weights, normalizing their sum."""
        w = np.asarray(weights, dtype=float)
        if w.size == 0 or np.any(w <= 0.0):
            raise ValueError("atom weights must be positive")
        w = w / w.sum()
        pairs = tuple(
            (float(a) % _TWO_PI, float(x)) for a, x in zip(angles, w, strict=True)
        )
        return cls(pairs)

    @property
    def angles(self) -> np.ndarray:
        return np.array([a for a, _ in self.atoms])

    @property
    def weights(self) -> np.ndarray:
        return np.array([w for _, w in self.atoms])


@dataclass(frozen=True)
class DiskMoebius:
    """Parameters of the disc self-map e^{i phi}(e^{i psi} z + zeta)/(1 + zeta e^{i psi} z).

    zeta is kept real in (-1, 1): with complex zeta (and no conjugation in
    the denominator) the map is not a disc self-map, so only the real slice
    is exposed.
    """

    zeta: float
    phi: float = 0.0
    psi: float = 0.0

    def __post_init__(self):
        if not -1.0 < self.zeta < 1.0:
            raise ValueError("zeta must lie in (-1, 1)")


def koebe(order: int = DEFAULT_ORDER) -> TruncatedSeries:
    """z/(1-z)^2 truncated: coefficient n at z^n."""
    if order < 1:
        raise ValueError("order must be >= 1")
    return TruncatedSeries(np.arange(order + 1, dtype=float))


def starlike_from_measure(measure: HerglotzMeasure,
                          order: int = DEFAULT_ORDER) -> TruncatedSeries:
    """Starlike h generated by an atomic circle measure.

    The generator p(z) = sum_k w_k (1 + e^{-i t_k} z)/(1 - e^{-i t_k} z) has
    positive real part and p(0) = 1; h solves z h'(z)/h(z) = p(z) with
    h(0) = 0, h'(0) = 1 through the coefficient recursion
    (n-1) a_n = sum_{j<n} p_{n-j} a_j.
    """
    if order < 1:
        raise ValueError("order must be >= 1")
    k = np.arange(order + 1)
    phases = np.exp(-1j * np.outer(k, measure.angles))
    p = 2.0 * phases @ measure.weights
    a = np.zeros(order + 1, np.complex128)
    a[1] = 1.0
    for n in range(2, order + 1):
        a[n] = np.dot(p[1:n][::-1], a[1:n]) / (n - 1)
    return TruncatedSeries(a)


def starlikeness_check(h: TruncatedSeries, grid: np.ndarray | None = None,
                       r_max: float = DEFAULT_R_MAX) -> tuple[bool, float]:
    """Minimum of Re(z h'(z)/h(z)) over the grid; ok iff the minimum is positive.

    The removable singularity at 0 takes its limit value 1.  A grid point
    where h vanishes away from 0 counts as failure (min -inf), not as an
    exception.
    """
    _require_normalized(h)
    if grid is None:
        grid = default_grid()
    hv, _ = h.evaluate(grid, r_max)
    hpv, _ = h.derivative().evaluate(grid, r_max)
    at_origin = np.abs(grid) < 1e-14
    vanished = (np.abs(hv) < 1e-14) & ~at_origin
    if np.any(vanished):
        return False, float("-inf")
    safe_h = np.where(at_origin | vanished, 1.0, hv)
    vals = np.where(at_origin, 1.0, np.real(grid * hpv / safe_h))
    mn = float(np.min(vals))
    return mn > 0.0, mn


def moebius_omega(p: DiskMoebius, order: int = DEFAULT_ORDER) -> TruncatedSeries:
    """Taylor series of the rotated disc automorphism described by ``p``.

    With w = e^{i psi} z the expansion is
    zeta + (1 - zeta^2) sum_{k>=1} (-zeta)^{k-1} w^k, all times e^{i phi}.
    """
    if order < 1:
        raise ValueError("order must be >= 1")
    c = np.zeros(order + 1, np.complex128)
    rot = np.exp(1j * p.phi)
    c[0] = rot * p.zeta
    k = np.arange(1, order + 1)
    c[1:] = rot * (1.0 - p.zeta**2) * (-p.zeta) ** (k - 1) * np.exp(1j * k * p.psi)
    return TruncatedSeries(c)


def blaschke_omega(zeros, rotation: float = 0.0, shrink: float = 1.0,
                   order: int = DEFAULT_ORDER) -> TruncatedSeries:
    """shrink * e^{i rotation} * prod_j (z - a_j)/(1 - conj(a_j) z).

    An analytic self-map of the disc (strictly contracting when shrink < 1),
    used as a richer admissible dilatation.  All zeros must lie inside the
    unit disc.
    """
    if not 0.0 < shrink <= 1.0:
        raise ValueError("shrink must lie in (0, 1]")
    zero_list = [complex(a) for a in zeros]
    if any(abs(a) >= 1.0 for a in zero_list):
        raise ValueError("Blaschke zeros must lie inside the unit disc")
    prod = TruncatedSeries([shrink * np.exp(1j * rotation)], order=order)
    for a in zero_list:
        numer = TruncatedSeries([-a, 1.0], order=order)
        denom = TruncatedSeries([1.0, -np.conj(a)], order=order).reciprocal()
        prod = prod * numer * denom
    return prod


class HarmonicMap:
    """A pair (h, g) of truncated series representing f = h + conj(g).

    Construction validates the normalization h(0) = 0, h'(0) = 1, g(0) = 0,
    that |b_1| agrees with alpha, and that |g'| < |h'| at every point of the
    sample grid (sense preservation as far as the grid can see).
    """

    __slots__ = ("_h", "_g", "_alpha", "_h_prime", "_g_prime")

    def __init__(self, h: TruncatedSeries, g: TruncatedSeries,
                 alpha: float | None = None, *,
                 grid: np.ndarray | None = None,
                 r_max: float = DEFAULT_R_MAX):
        _require_normalized(h)
        if abs(g.coeff(0)) > _NORM_TOL:
            raise ValueError("co-analytic part must vanish at 0")
        b1 = abs(g.coeff(1))
        if alpha is None:
            alpha = b1
        if abs(b1 - alpha) > _NORM_TOL:
            raise ValueError(f"|b_1| = {b1:.17g} does not match alpha = {alpha:.17g}")
        if not 0.0 <= alpha < 1.0:
            raise ValueError("alpha must lie in [0, 1)")
        self._h = h
        self._g = g
        self._alpha = float(alpha)
        self._h_prime = h.derivative()
        self._g_prime = g.derivative()
        if grid is None:
            grid = default_grid()
        hp, _ = self._h_prime.evaluate(grid, r_max)
        gp, _ = self._g_prime.evaluate(grid, r_max)
        if not np.all(np.abs(gp) < np.abs(hp)):
            worst = int(np.argmax(np.abs(gp) - np.abs(hp)))
            raise ValueError(
                f"not sense-preserving on the sample grid: |g'| >= |h'| at z = {grid[worst]:.4f}"
            )

    @property
    def h(self) -> TruncatedSeries:
        return self._h

    @property
    def g(self) -> TruncatedSeries:
        return self._g

    @property
    def alpha(self) -> float:
        return self._alpha

    @property
    def h_prime(self) -> TruncatedSeries:
        return self._h_prime

    @property
    def g_prime(self) -> TruncatedSeries:
        return self._g_prime

    def eval_f(self, z, r_max: float = DEFAULT_R_MAX):
        """f(z) = h(z) + conj(g(z)) for a point or ndarray of points."""
        hv, _ = self._h.evaluate(z, r_max)
        gv, _ = self._g.evaluate(z, r_max)
        return hv + gv.conjugate()

    def eval_dilatation(self, z, r_max: float = DEFAULT_R_MAX):
        """Second complex dilatation g'(z)/h'(z)."""
        hp, _ = self._h_prime.evaluate(z, r_max)
        gp, _ = self._g_prime.evaluate(z, r_max)
        return gp / hp

    def eval_jacobian(self, z, r_max: float = DEFAULT_R_MAX):
        """J_f(z) = |h'(z)|^2 - |g'(z)|^2 (positive for valid members)."""
        hp, _ = self._h_prime.evaluate(z, r_max)
        gp, _ = self._g_prime.evaluate(z, r_max)
        return abs(hp) ** 2 - abs(gp) ** 2


def build_harmonic(h: TruncatedSeries, omega: TruncatedSeries,
                   grid: np.ndarray | None = None,
                   r_max: float = DEFAULT_R_MAX) -> HarmonicMap:
    """Member factory: solve g' = omega h' with g(0) = 0.

    The dilatation is admitted only if |omega| < 1 at every grid point;
    alpha is |omega(0)|.
    """
    _require_normalized(h)
    if grid is None:
        grid = default_grid()
    ov, _ = omega.evaluate(grid, r_max)
    top = float(np.max(np.abs(ov)))
    if top >= 1.0:
        raise ValueError(f"dilatation reaches modulus {top:.6f} >= 1 on the sample grid")
    g = (omega * h.derivative()).antiderivative0()
    return HarmonicMap(h, g, alpha=abs(omega.coeff(0)), grid=grid, r_max=r_max)


def extremal_map(zeta: float, order: int = DEFAULT_ORDER,
                 grid: np.ndarray | None = None) -> HarmonicMap:
    """Closed-form extremal member with Koebe analytic part.

    Its dilatation is (z + zeta)/(1 + zeta z) and its co-analytic part

        g(z) = q^2 log((1 + zeta z)/(1 - z)) + z/(1-z)^2 - q 2z/(1-z),
        q = (1 - zeta)/(1 + zeta),

    expanded with the principal logarithm (both factors have positive real
    part on the disc for real zeta >= 0).  Radial values of |g| attain the
    sharp log-form growth bound.
    """
    if not 0.0 <= zeta < 1.0:
        raise ValueError("zeta must lie in [0, 1)")
    if order < 2:
        raise ValueError("order must be >= 2")
    q = (1.0 - zeta) / (1.0 + zeta)
    n = np.arange(1, order + 1, dtype=float)
    log_coeffs = (1.0 - (-zeta) ** n) / n
    b = np.zeros(order + 1, np.complex128)
    b[1:] = q * q * log_coeffs + n - 2.0 * q
    b[1] = zeta  # closed form gives g'(0) = zeta exactly
    return HarmonicMap(koebe(order), TruncatedSeries(b), alpha=zeta, grid=grid)


def alexander_up(s: TruncatedSeries) -> TruncatedSeries:
    """H with h(z) = z H'(z): divide coefficient n by n (needs s(0) = 0)."""
    if abs(s.coeff(0)) > _NORM_TOL:
        raise ValueError("series must vanish at 0")
    n = np.arange(1, s.order + 1)
    out = np.zeros(s.order + 1, np.complex128)
    out[1:] = s.coeffs[1:] / n
    return TruncatedSeries(out)


def alexander_down(s: TruncatedSeries) -> TruncatedSeries:
    """Inverse of :func:`alexander_up`: multiply coefficient n by n."""
    if abs(s.coeff(0)) > _NORM_TOL:
        raise ValueError("series must vanish at 0")
    return TruncatedSeries(s.coeffs * np.arange(s.order + 1))


def alexander_lift(m: HarmonicMap, grid: np.ndarray | None = None) -> HarmonicMap:
    """Lift (h, g) to the convex picture (H, G) with h = zH', g = zG'.

    The construction re-checks |G'| < |H'| on the grid rather than assuming
    it; a violation raises (it would falsify the lift theorem).
    """
    return HarmonicMap(alexander_up(m.h), alexander_up(m.g), alpha=m.alpha, grid=grid)


# -- seeded random members ------------------------------------------------

def sample_measure(rng: np.random.Generator, max_atoms: int = 8) -> HerglotzMeasure:
    """Atom count uniform in 1..max_atoms, angles uniform, weights normalized."""
    count = int(rng.integers(1, max_atoms + 1))
    angles = rng.uniform(0.0, _TWO_PI, count)
    weights = rng.uniform(0.1, 1.0, count)
    return HerglotzMeasure.from_atoms(angles, weights)


def sample_dilatation(rng: np.random.Generator,
                      order: int = DEFAULT_ORDER) -> tuple[TruncatedSeries, dict]:
    """Draw a disc automorphism (real zeta) or a shrunk Blaschke product.

    Parameter ranges (|zeta| <= 0.9, zero radius <= 0.8) keep truncation
    tails well inside the verification slack.
    """
    if rng.integers(0, 2) == 0:
        p = DiskMoebius(
            zeta=float(rng.uniform(-0.9, 0.9)),
            phi=float(rng.uniform(0.0, _TWO_PI)),
            psi=float(rng.uniform(0.0, _TWO_PI)),
        )
        info = {"dilatation": "moebius", "zeta": p.zeta, "phi": p.phi, "psi": p.psi}
        return moebius_omega(p, order), info
    n_zeros = int(rng.integers(0, 4))
    radii = 0.8 * np.sqrt(rng.uniform(0.0, 1.0, n_zeros))
    args = rng.uniform(0.0, _TWO_PI, n_zeros)
    zeros = radii * np.exp(1j * args)
    rotation = float(rng.uniform(0.0, _TWO_PI))
    shrink = float(rng.uniform(0.2, 1.0))
    info = {
        "dilatation": "blaschke",
        "zeros": [[float(z.real), float(z.imag)] for z in zeros],
        "rotation": rotation,
        "shrink": shrink,
    }
    return blaschke_omega(zeros, rotation, shrink, order), info


def sample_member(rng: np.random.Generator, order: int = DEFAULT_ORDER,
                  grid: np.ndarray | None = None) -> tuple[HarmonicMap, dict]:
    """Draw one random class member plus its generator parameters.

    Deterministic for a given generator state; the measure is drawn first,
    then the dilatation.
    """
    measure = sample_measure(rng)
    h = starlike_from_measure(measure, order)
    omega, info = sample_dilatation(rng, order)
    member = build_harmonic(h, omega, grid=grid)
    info = dict(info)
    info["atoms"] = [[t, w] for t, w in measure.atoms]
    return member, info
