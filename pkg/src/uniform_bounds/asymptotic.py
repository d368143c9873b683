"""Certified solution of the transcendental rate inequality.

For local dimension q, k-uniform states require k <= theta*n for large n
whenever theta < 1/2 satisfies

    (1/2)log(1-2t) + (1-t)log((1-t)/(1-2t)) + t*log 2 - (1-2t)log q > 0.

The function is negative near 0 (limit -log q), positive in a left
neighbourhood of 1/2, and crosses once, so the reported value is the
smallest grid point of 10^-decimals resolution to the right of the root.

Every sign here is certified: evaluation runs in interval arithmetic
(mpmath.iv) at increasing working precision until the enclosing interval
excludes zero, and the reported margin is the exact rational lower bound
of that interval.  A sign that cannot be separated from zero at the
maximum precision raises instead of guessing, since every other module in
the package is exact and this one must not be the silent weak link.
"""

from __future__ import annotations

import threading
from dataclasses import dataclass
from fractions import Fraction

from mpmath import iv

DEFAULT_PREC_BITS = 128
MAX_PREC_BITS = 4096

_iv_lock = threading.Lock()  # iv.prec is process-global state


class PrecisionExhausted(ArithmeticError):
    """|f| could not be separated from zero at the maximum working precision."""


def _iv_fraction(x: Fraction):
    return iv.mpf(x.numerator) / x.denominator


def theta_function(theta: Fraction, q: int, prec_bits: int = DEFAULT_PREC_BITS):
    """Interval enclosure of the rate function at an exact rational theta.

    Returns an iv.mpf whose endpoints bound the true value; the enclosure
    width is the tracked evaluation error.
    """
    theta = Fraction(theta)
    if not 0 < theta < Fraction(1, 2):
        raise ValueError(f"theta must lie strictly inside (0, 1/2), got {theta}")
    if q < 2:
        raise ValueError(f"q must be >= 2, got {q}")
    with _iv_lock:
        old = iv.prec
        iv.prec = prec_bits
        try:
            t = _iv_fraction(theta)
            one = iv.mpf(1)
            value = (
                iv.log(one - 2 * t) / 2
                + (one - t) * iv.log((one - t) / (one - 2 * t))
                + t * iv.log(2)
                - (one - 2 * t) * iv.log(q)
            )
        finally:
            iv.prec = old
    return value


def _endpoint_fraction(raw) -> Fraction:
    # raw mpf data: (sign, mantissa, exponent, bitcount) -> +-man * 2^exp
    sign, man, exp, _ = raw
    value = Fraction(int(man)) * Fraction(2) ** int(exp)
    return -value if sign else value


def interval_bounds(value) -> tuple[Fraction, Fraction]:
    """Exact rational endpoints of an interval-arithmetic result."""
    lo_raw, hi_raw = value._mpi_
    return _endpoint_fraction(lo_raw), _endpoint_fraction(hi_raw)


def certified_sign(theta: Fraction, q: int, prec_bits: int = DEFAULT_PREC_BITS) -> tuple[int, Fraction]:
    """(sign, margin): sign of f(theta, q) with an exact rational margin.

    The margin is the distance from zero to the nearer interval endpoint,
    so it exceeds the evaluation error by construction.  Precision doubles
    until the interval excludes zero.
    """
    prec = prec_bits
    while prec <= MAX_PREC_BITS:
        value = theta_function(theta, q, prec)
        lo, hi = interval_bounds(value)
        if lo > 0:
            return 1, lo
        if hi < 0:
            return -1, -hi
        prec *= 2
    raise PrecisionExhausted(
        f"undecided at this precision: f({theta}, {q}) not separated from zero at {MAX_PREC_BITS} bits"
    )


@dataclass(frozen=True)
class RateBound:
    """Smallest grid value theta with certified f(theta, q) > 0."""

    q: int
    theta: Fraction
    decimals: int
    margin: Fraction
    prec_bits: int

    def theta_str(self) -> str:
        scaled = self.theta * 10**self.decimals
        assert scaled.denominator == 1
        digits = str(scaled.numerator).rjust(self.decimals + 1, "0")
        return f"0.{digits[-self.decimals:]}" if self.theta < 1 else str(float(self.theta))


def theta_bound(q: int, decimals: int = 3, prec_bits: int = DEFAULT_PREC_BITS) -> RateBound:
    """Bisection-refined root bracket, then the first positive grid point.

    Reported theta rounds *up* to the grid: it is the smallest multiple of
    10^-decimals whose sign certifies positive, which is what a one-sided
    non-existence bound needs.
    """
    if decimals < 1:
        raise ValueError("decimals must be >= 1")
    step = Fraction(1, 10**decimals)
    half = Fraction(1, 2)

    lo = min(step, Fraction(1, 64))
    while certified_sign(lo, q, prec_bits)[0] > 0:
        lo /= 2
        if lo < Fraction(1, 10**9):
            raise AssertionError("rate function must be negative near zero")
    hi = None
    for j in range(2, 60):
        cand = half - Fraction(1, 2**j)
        if cand <= lo:
            continue
        if certified_sign(cand, q, prec_bits)[0] > 0:
            hi = cand
            break
    if hi is None:
        raise PrecisionExhausted(f"no certified-positive point found below 1/2 for q={q}")

    while hi - lo > step / 4:
        mid = (lo + hi) / 2
        if certified_sign(mid, q, prec_bits)[0] > 0:
            hi = mid
        else:
            lo = mid

    grid = (lo.numerator * step.denominator // (lo.denominator * step.numerator)) * step
    if grid <= lo:
        grid += step
    while grid < half:
        sign, margin = certified_sign(grid, q, prec_bits)
        if sign > 0:
            return RateBound(q, grid, decimals, margin, prec_bits)
        grid += step
    raise PrecisionExhausted(
        f"no grid point below 1/2 certifies positive for q={q} at {decimals} decimals; increase decimals"
    )
