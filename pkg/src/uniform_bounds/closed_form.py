"""Closed-form non-existence thresholds for k-uniform states.

Methods collected here decide, from (n, k, q) alone and in exact integer
arithmetic, that no k-uniform state exists in (C^q)^{tensor n}:

  * Singleton guard      k > floor(n/2) is impossible outright.
  * Scott threshold      AME (k = floor(n/2)): n > 2(q^2-1) even,
                         n > 2q(q+1)-1 odd.
  * defect-1 threshold   k = floor(n/2)-1: n > 4q^2 even, n > 4q^2+4q+1 odd.
  * defect-2 threshold   k = floor(n/2)-2: n > 6q^2+2 even,
                         n > 6q^2+6q+3 odd.
  * general defect l     factorial-ratio criterion (l >= 2 even n,
                         l >= 1 odd n), evaluated with exact integers.
  * two-support dual     the binomial-ratio inequality behind the dual
                         certificate supported on floor(n/2)+1 and n-k.

All thresholds are strict inequalities; equality is inconclusive.  A
"nonexistent" verdict always carries the exact numbers that were compared,
and for the two-support method the dual certificate itself.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass, field
from fractions import Fraction

from . import lp as lp_mod
from .exact import fraction_to_pair


class Method(str, enum.Enum):
    SINGLETON = "singleton"
    SCOTT = "scott"
    DEFECT1 = "defect1"
    DEFECT2 = "defect2"
    COROLLARY_L = "corollary_l"
    TWO_SUPPORT = "two_support"
    SHADOW_PROP1 = "shadow_prop1"
    LP = "lp"


@dataclass(frozen=True)
class BoundVerdict:
    """Outcome of one method on one query.

    exists_possible is False only when the method's exact condition was
    verified; the trace holds every compared rational so the comparison can
    be independently recombined.  Inconclusive verdicts carry a reason.
    """

    n: int
    k: int
    q: int
    method: Method
    exists_possible: bool
    reason: str | None = None
    trace: dict = field(default_factory=dict)
    certificate: lp_mod.DualCertificate | None = None

    @property
    def nonexistent(self) -> bool:
        return not self.exists_possible


def _nonexistent(n, k, q, method, trace, certificate=None) -> BoundVerdict:
    return BoundVerdict(n, k, q, method, exists_possible=False, trace=trace, certificate=certificate)


def _inconclusive(n, k, q, method, reason, trace=None) -> BoundVerdict:
    return BoundVerdict(n, k, q, method, exists_possible=True, reason=reason, trace=trace or {})


def singleton_check(n: int, k: int) -> BoundVerdict:
    q = 2  # the guard is dimension-independent
    if k > n // 2:
        return _nonexistent(n, k, q, Method.SINGLETON, {"k": k, "half": n // 2})
    return _inconclusive(n, k, q, Method.SINGLETON, "k <= floor(n/2)")


def scott_check(n: int, q: int) -> BoundVerdict:
    """AME threshold, k = floor(n/2)."""
    k = n // 2
    threshold = 2 * (q * q - 1) if n % 2 == 0 else 2 * q * (q + 1) - 1
    trace = {"threshold": threshold, "parity": "even" if n % 2 == 0 else "odd"}
    if n > threshold:
        return _nonexistent(n, k, q, Method.SCOTT, trace)
    return _inconclusive(n, k, q, Method.SCOTT, f"n <= {threshold}", trace)


def defect1_check(n: int, q: int) -> BoundVerdict:
    """k = floor(n/2) - 1."""
    k = n // 2 - 1
    if k < 0:
        return _inconclusive(n, k, q, Method.DEFECT1, "k < 0")
    threshold = 4 * q * q if n % 2 == 0 else 4 * q * q + 4 * q + 1
    trace = {"threshold": threshold, "parity": "even" if n % 2 == 0 else "odd"}
    if n > threshold:
        return _nonexistent(n, k, q, Method.DEFECT1, trace)
    return _inconclusive(n, k, q, Method.DEFECT1, f"n <= {threshold}", trace)


def defect2_check(n: int, q: int) -> BoundVerdict:
    """k = floor(n/2) - 2."""
    k = n // 2 - 2
    if k < 0:
        return _inconclusive(n, k, q, Method.DEFECT2, "k < 0")
    threshold = 6 * q * q + 2 if n % 2 == 0 else 6 * q * q + 6 * q + 3
    trace = {"threshold": threshold, "parity": "even" if n % 2 == 0 else "odd"}
    if n > threshold:
        return _nonexistent(n, k, q, Method.DEFECT2, trace)
    return _inconclusive(n, k, q, Method.DEFECT2, f"n <= {threshold}", trace)


def corollary_l_check(n: int, q: int, l: int) -> BoundVerdict:
    """Factorial-ratio criterion for defect l, exact integers throughout.

    Even n = 2m (needs l >= 2):
        (m+2)(m+3)...(m+l)  >  (q^{2l}-1)/(q^2-1) * (2l-1)!/l!
    Odd n = 2m+1 (needs l >= 1):
        (m+2)(m+3)...(m+l+1) > (q^{2l+1}-1)/(q-1) * (2l)!/l!
    """
    k = n // 2 - l
    if k < 0:
        return _inconclusive(n, k, q, Method.COROLLARY_L, "k < 0")
    if n % 2 == 0:
        if l < 2:
            return _inconclusive(n, k, q, Method.COROLLARY_L, "not applicable: even n needs l >= 2")
        m = n // 2
        lhs = math.prod(range(m + 2, m + l + 1))
        rhs = (q ** (2 * l) - 1) // (q * q - 1) * (math.factorial(2 * l - 1) // math.factorial(l))
    else:
        if l < 1:
            return _inconclusive(n, k, q, Method.COROLLARY_L, "not applicable: odd n needs l >= 1")
        m = (n - 1) // 2
        lhs = math.prod(range(m + 2, m + l + 2))
        rhs = (q ** (2 * l + 1) - 1) // (q - 1) * (math.factorial(2 * l) // math.factorial(l))
    trace = {"lhs": lhs, "rhs": rhs, "l": l, "parity": "even" if n % 2 == 0 else "odd"}
    if lhs > rhs:
        return _nonexistent(n, k, q, Method.COROLLARY_L, trace)
    return _inconclusive(n, k, q, Method.COROLLARY_L, "factorial ratio not exceeded", trace)


def two_support_check(n: int, k: int, q: int) -> BoundVerdict:
    """Two-support dual criterion; the verdict embeds the certificate."""
    try:
        lhs, rhs = lp_mod.two_support_comparison(n, k, q)
    except lp_mod.NotApplicable as exc:
        return _inconclusive(n, k, q, Method.TWO_SUPPORT, f"not applicable: {exc}")
    trace = {
        "lhs": fraction_to_pair(lhs),
        "rhs": fraction_to_pair(rhs),
        "u": n // 2 + 1,
        "v": n - k,
    }
    if lhs > rhs:
        cert = lp_mod.two_support_certificate(n, k, q)
        return _nonexistent(n, k, q, Method.TWO_SUPPORT, trace, certificate=cert)
    return _inconclusive(n, k, q, Method.TWO_SUPPORT, "binomial-ratio inequality fails", trace)


def defect_fires(n: int, q: int, l: int) -> bool:
    """Disjunction of the strongest applicable closed-form methods at defect l.

    l = 0 uses the AME threshold; l in {1, 2} additionally consults the
    factorial-ratio criterion (whichever fires first wins: the comparison
    between the two flips direction with q); l >= 3 uses the factorial
    ratio alone.
    """
    if n // 2 - l < 0:
        return False
    if l == 0:
        return scott_check(n, q).nonexistent
    if l == 1:
        return defect1_check(n, q).nonexistent or corollary_l_check(n, q, 1).nonexistent
    if l == 2:
        return defect2_check(n, q).nonexistent or corollary_l_check(n, q, 2).nonexistent
    return corollary_l_check(n, q, l).nonexistent


def min_n_scan(q: int, l: int, parity: str, max_n: int = 100_000) -> int | None:
    """Smallest n of the given parity flagged nonexistent at defect l.

    Returns None if nothing fires up to max_n.  Within a parity class the
    criteria are monotone in n, so the first hit is the threshold.
    """
    if parity not in ("even", "odd"):
        raise ValueError(f"parity must be 'even' or 'odd', got {parity!r}")
    n = max(2 * l, 2) if parity == "even" else max(2 * l + 1, 1)
    while n <= max_n:
        if defect_fires(n, q, l):
            return n
        n += 2
    return None


@dataclass(frozen=True)
class Conjecture2Gap:
    """Exploratory comparison of scanned thresholds against (2l+2)q^2."""

    q: int
    l: int
    min_n_even: int | None
    min_n_odd: int | None
    reference: int

    @property
    def gap_even(self) -> int | None:
        return None if self.min_n_even is None else self.min_n_even - self.reference

    @property
    def gap_odd(self) -> int | None:
        return None if self.min_n_odd is None else self.min_n_odd - self.reference


def conjecture2_gap(q: int, l: int, max_n: int = 100_000) -> Conjecture2Gap:
    return Conjecture2Gap(
        q=q,
        l=l,
        min_n_even=min_n_scan(q, l, "even", max_n),
        min_n_odd=min_n_scan(q, l, "odd", max_n),
        reference=(2 * l + 2) * q * q,
    )
