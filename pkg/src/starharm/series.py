"""Truncated complex power series with certified evaluation tails.

The coefficient array is the one data structure the rest of the package
works on: analytic parts, co-analytic parts, dilatations and their
Alexander transforms are all carried as :class:`TruncatedSeries`.
"""

from __future__ import annotations

import numpy as np

#: Default truncation order.  Class members have coefficients growing at
#: most quadratically, so the discarded tail stays below 1e-6 on the
#: certified disc |z| <= 0.9.
DEFAULT_ORDER = 256

#: Largest radius at which evaluations are certified.
DEFAULT_R_MAX = 0.9


class DomainError(ValueError):
    """Raised when an evaluation point leaves the certified disc."""


class TruncatedSeries:
    """A complex power series kept to finitely many Taylor coefficients.

    ``coeffs[n]`` is the coefficient of ``z**n``; the order ``N`` equals
    ``len(coeffs) - 1``.  Instances are immutable, and every arithmetic
    operation truncates its result to the smaller operand order.
    """

    __slots__ = ("_coeffs", "_tail_const")

    def __init__(self, coeffs, order: int | None = None):
        arr = np.atleast_1d(np.asarray(coeffs, dtype=np.complex128)).ravel()
        if arr.size == 0:
            raise ValueError("a series needs at least its constant coefficient")
        if order is not None:
            if order < 0:
                raise ValueError("order must be nonnegative")
            if arr.size < order + 1:
                arr = np.concatenate([arr, np.zeros(order + 1 - arr.size, np.complex128)])
            else:
                arr = arr[: order + 1]
        arr = arr.copy()
        arr.setflags(write=False)
        self._coeffs = arr
        if arr.size > 1:
            n = np.arange(1, arr.size, dtype=float)
            self._tail_const = float(np.max(np.abs(arr[1:]) / n**2))
        else:
            self._tail_const = 0.0

    @property
    def coeffs(self) -> np.ndarray:
        """Read-only coefficient array, index n holding the z**n coefficient."""
        return self._coeffs

    @property
    def order(self) -> int:
        return self._coeffs.size - 1

    def coeff(self, n: int) -> complex:
        """Coefficient of z**n (0 beyond the truncation order)."""
        if n < 0:
            raise ValueError("coefficient index must be nonnegative")
        if n > self.order:
            return 0j
        return complex(self._coeffs[n])

    def truncate(self, order: int) -> TruncatedSeries:
        """Copy padded or cut to the given order."""
        return TruncatedSeries(self._coeffs, order=order)

    def __repr__(self) -> str:
        lead = ", ".join(f"{c:.4g}" for c in self._coeffs[:4].tolist())
        tail = ", ..." if self.order >= 4 else ""
        return f"TruncatedSeries(order={self.order}, coeffs=[{lead}{tail}])"

    # -- ring operations (all truncate to the smaller operand order) --

    def __add__(self, other):
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        n = min(self.order, other.order) + 1
        return TruncatedSeries(self._coeffs[:n] + other._coeffs[:n])

    def __sub__(self, other):
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        n = min(self.order, other.order) + 1
        return TruncatedSeries(self._coeffs[:n] - other._coeffs[:n])

    def __neg__(self) -> TruncatedSeries:
        return TruncatedSeries(-self._coeffs)

    def __mul__(self, other):
        if isinstance(other, TruncatedSeries):
            n = min(self.order, other.order) + 1
            return TruncatedSeries(np.convolve(self._coeffs[:n], other._coeffs[:n])[:n])
        return TruncatedSeries(self._coeffs * complex(other))

    __rmul__ = __mul__

    # -- calculus --

    def derivative(self) -> TruncatedSeries:
        """Termwise derivative; drops the order by one."""
        if self.order == 0:
            return TruncatedSeries([0.0])
        n = np.arange(1, self.order + 1)
        return TruncatedSeries(self._coeffs[1:] * n)

    def antiderivative0(self) -> TruncatedSeries:
        """Termwise antiderivative vanishing at 0; raises the order by one."""
        n = np.arange(1, self.order + 2)
        return TruncatedSeries(np.concatenate([[0.0], self._coeffs / n]))

    def compose0(self, inner: TruncatedSeries) -> TruncatedSeries:
        """Coefficients of self(inner(z)); inner must fix the origin."""
        if inner._coeffs[0] != 0:
            raise ValueError("inner series must vanish at 0")
        order = min(self.order, inner.order)
        ic = inner._coeffs[: order + 1]
        out = np.zeros(order + 1, np.complex128)
        for c in self._coeffs[order::-1]:
            out = np.convolve(out, ic)[: order + 1]
            out[0] += c
        return TruncatedSeries(out)

    def reciprocal(self) -> TruncatedSeries:
        """Multiplicative inverse at the truncation order; needs s(0) != 0."""
        a = self._coeffs
        if a[0] == 0:
            raise ValueError("cannot invert a series vanishing at 0")
        b = np.zeros(a.size, np.complex128)
        b[0] = 1.0 / a[0]
        for n in range(1, a.size):
            b[n] = -np.dot(a[1 : n + 1], b[n - 1 :: -1]) / a[0]
        return TruncatedSeries(b)

    def exp0(self) -> TruncatedSeries:
        """exp of a series vanishing at 0, via e' = s' e."""
        if self._coeffs[0] != 0:
            raise ValueError("exp0 requires a series vanishing at 0")
        weighted = self._coeffs * np.arange(self._coeffs.size)
        e = np.zeros(self._coeffs.size, np.complex128)
        e[0] = 1.0
        for n in range(1, e.size):
            e[n] = np.dot(weighted[1 : n + 1], e[n - 1 :: -1]) / n
        return TruncatedSeries(e)

    # -- evaluation --

    def tail_bound(self, radius):
        """Majorant of the discarded tail at |z| = radius.

        Uses |c_n| <= C n**2 with C read off the retained coefficients, valid
        for every class member, and sums the majorant tail in closed form.
        """
        m = self.order + 1
        x = np.asarray(radius, dtype=float)
        one = 1.0 - x
        geom = x**m * (m * m / one + (2 * m + 1) * x / one**2 + 2 * x**2 / one**3)
        return self._tail_const * geom

    def evaluate(self, z, r_max: float = DEFAULT_R_MAX):
        """Horner evaluation at a point (or ndarray of points) in the disc.

        Args:
            z: evaluation point(s) with |z| <= r_max.
            r_max: certified evaluation radius, must lie in (0, 1).

        Returns:
            (value, tail_bound) where tail_bound majorizes the truncation
            error under the quadratic coefficient-growth model.

        Raises:
            DomainError: if any point lies outside |z| <= r_max.
        """
        if not 0.0 < r_max < 1.0:
            raise ValueError("r_max must lie in (0, 1)")
        zs = np.asarray(z, dtype=np.complex128)
        radius = np.abs(zs)
        if np.any(radius > r_max + 1e-12):
            raise DomainError(f"evaluation outside certified disc |z| <= {r_max:g}")
        if zs.ndim == 0:
            zz = complex(zs)
            acc = 0j
            for c in self._coeffs[::-1].tolist():
                acc = acc * zz + c
            return acc, float(self.tail_bound(float(radius)))
        acc = np.zeros_like(zs)
        for c in self._coeffs[::-1]:
            acc = acc * zs + c
        return acc, self.tail_bound(radius)
