"""Exact arithmetic substrate: binomial coefficients, truncated rational
power series, and homogeneous bivariate polynomials under linear substitution.

Everything in this module is exact.  All scalars are Python ints or
`fractions.Fraction`; no float ever enters, because the bound criteria
downstream are strict inequalities between very large rationals and any
rounding would invalidate a certificate.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

# The exact rational scalar type used throughout the package.  Fraction is
# always stored in lowest terms with a positive denominator, which is
# exactly the invariant the certificates rely on.
Rational = Fraction


@lru_cache(maxsize=1 << 16)
def binomial(n: int, k: int) -> int:
    """C(n, k) with the convention C(n, k) = 0 for k < 0 or k > n."""
    if n < 0:
        raise ValueError(f"binomial: n must be >= 0, got {n}")
    if k < 0 or k > n:
        return 0
    return math.comb(n, k)


def _as_fraction_tuple(values) -> tuple[Fraction, ...]:
    return tuple(Fraction(v) for v in values)


@dataclass(frozen=True)
class PowerSeries:
    """Formal power series truncated at an explicit order.

    ``coeffs[i]`` is the coefficient of y^i, for i in [0, T] where
    T = len(coeffs) - 1.  Operations never consult coefficients beyond the
    truncation order; combining two series truncates to the smaller order.
    The order is part of the value, never ambient state, because coefficient
    extraction at an exact index must not silently read past the truncation.
    """

    coeffs: tuple[Fraction, ...]

    def __post_init__(self):
        object.__setattr__(self, "coeffs", _as_fraction_tuple(self.coeffs))
        if not self.coeffs:
            raise ValueError("PowerSeries needs at least the constant term")

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    def coeff(self, i: int) -> Fraction:
        if not 0 <= i <= self.order:
            raise IndexError(f"coefficient {i} beyond truncation order {self.order}")
        return self.coeffs[i]

    @staticmethod
    def one(order: int) -> "PowerSeries":
        return PowerSeries((Fraction(1),) + (Fraction(0),) * order)

    @staticmethod
    def linear(c0, c1, order: int) -> "PowerSeries":
        """c0 + c1*y truncated at `order`; order 0 keeps just the constant."""
        coeffs = [Fraction(c0)] + [Fraction(0)] * order
        if order >= 1:
            coeffs[1] = Fraction(c1)
        return PowerSeries(tuple(coeffs))

    def add(self, other: "PowerSeries") -> "PowerSeries":
        T = min(self.order, other.order)
        return PowerSeries(tuple(a + b for a, b in zip(self.coeffs[: T + 1], other.coeffs[: T + 1])))

    def sub(self, other: "PowerSeries") -> "PowerSeries":
        T = min(self.order, other.order)
        return PowerSeries(tuple(a - b for a, b in zip(self.coeffs[: T + 1], other.coeffs[: T + 1])))

    def scale(self, c) -> "PowerSeries":
        c = Fraction(c)
        return PowerSeries(tuple(c * a for a in self.coeffs))

    def mul(self, other: "PowerSeries") -> "PowerSeries":
        T = min(self.order, other.order)
        out = [Fraction(0)] * (T + 1)
        for i, a in enumerate(self.coeffs[: T + 1]):
            if a == 0:
                continue
            for j, b in enumerate(other.coeffs[: T + 1 - i]):
                if b != 0:
                    out[i + j] += a * b
        return PowerSeries(tuple(out))

    def pow(self, e: int) -> "PowerSeries":
        """Integer power; negative exponents go through the inverse."""
        if e < 0:
            return self.inverse().pow(-e)
        result = PowerSeries.one(self.order)
        base = self
        while e:
            if e & 1:
                result = result.mul(base)
            base = base.mul(base)
            e >>= 1
        return result

    def derive(self) -> "PowerSeries":
        """Formal derivative; the result is truncated at order T-1."""
        if self.order == 0:
            return PowerSeries((Fraction(0),))
        return PowerSeries(tuple((i + 1) * c for i, c in enumerate(self.coeffs[1:])))

    def inverse(self) -> "PowerSeries":
        """Multiplicative inverse; requires a nonzero constant term."""
        if self.coeffs[0] == 0:
            raise ZeroDivisionError("series with zero constant term has no inverse")
        T = self.order
        out = [Fraction(0)] * (T + 1)
        out[0] = 1 / self.coeffs[0]
        for m in range(1, T + 1):
            acc = Fraction(0)
            for j in range(1, m + 1):
                if self.coeffs[j] != 0:
                    acc += self.coeffs[j] * out[m - j]
            out[m] = -acc / self.coeffs[0]
        return PowerSeries(tuple(out))

    def __add__(self, other):
        return self.add(other)

    def __sub__(self, other):
        return self.sub(other)

    def __mul__(self, other):
        return self.mul(other)


def series_mul(a: PowerSeries, b: PowerSeries) -> PowerSeries:
    return a.mul(b)


def series_pow(a: PowerSeries, e: int) -> PowerSeries:
    return a.pow(e)


def series_derive(a: PowerSeries) -> PowerSeries:
    return a.derive()


def series_inverse(a: PowerSeries) -> PowerSeries:
    return a.inverse()


@dataclass(frozen=True)
class HomogeneousPoly:
    """Homogeneous bivariate polynomial of degree n.

    ``coeffs[i]`` is the coefficient of x^{n-i} y^i; the length is exactly
    n + 1.
    """

    coeffs: tuple[Fraction, ...]

    def __post_init__(self):
        object.__setattr__(self, "coeffs", _as_fraction_tuple(self.coeffs))
        if not self.coeffs:
            raise ValueError("HomogeneousPoly needs degree >= 0")

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1


def _linear_form_powers(a: Fraction, b: Fraction, n: int) -> list[list[Fraction]]:
    """Coefficient vectors of (a*x + b*y)^j for j = 0..n, indexed by y-power."""
    powers = [[Fraction(1)]]
    for _ in range(n):
        prev = powers[-1]
        cur = [Fraction(0)] * (len(prev) + 1)
        for t, v in enumerate(prev):
            if v != 0:
                cur[t] += v * a
                cur[t + 1] += v * b
        powers.append(cur)
    return powers


def substitute_linear(p: HomogeneousPoly, a, b, c, d) -> HomogeneousPoly:
    """Coefficients of p(a*x + b*y, c*x + d*y), exactly.

    Substituting two linear forms into a degree-n homogeneous polynomial
    yields another degree-n homogeneous polynomial.
    """
    a, b, c, d = Fraction(a), Fraction(b), Fraction(c), Fraction(d)
    n = p.degree
    first = _linear_form_powers(a, b, n)
    second = _linear_form_powers(c, d, n)
    out = [Fraction(0)] * (n + 1)
    for i, pi in enumerate(p.coeffs):
        if pi == 0:
            continue
        xs = first[n - i]
        ys = second[i]
        for s, xv in enumerate(xs):
            if xv == 0:
                continue
            pxv = pi * xv
            for t, yv in enumerate(ys):
                if yv != 0:
                    out[s + t] += pxv * yv
    return HomogeneousPoly(tuple(out))


# --- rational <-> JSON plumbing -------------------------------------------
#
# Rationals cross process boundaries as ["num", "den"] pairs of decimal
# strings so arbitrary precision survives transport.

def fraction_to_pair(x) -> list[str]:
    x = Fraction(x)
    return [str(x.numerator), str(x.denominator)]


def fraction_from_pair(pair) -> Fraction:
    num, den = pair
    return Fraction(int(str(num)), int(str(den)))
