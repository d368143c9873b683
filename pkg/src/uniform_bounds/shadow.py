"""Shadow-enumerator refinement of the piecewise shadow bounds.

A weight enumerator expands in the basis (x+(q-1)y)^{n-2i} (y(x-y))^i,
i in [0, floor(n/2)] (each basis element is invariant under the
MacWilliams substitution).  Writing c_i = sum_j alpha_{i,j} A_j, the shadow
enumerator forces (-1)^i c_i >= 0, and for a k-uniform state with k odd the
pair (c_{k+1}, c_{k+2}) yields the refinement criterion: with
beta = (k+1)(2q-1) - (q-1)n >= 0,

        beta * alpha_{k+1,0} < alpha_{k+2,0}

is incompatible with A_{k+2} >= 0, so no such state exists.

alpha_{i,0} has two independent routes: an explicit alternating binomial
sum (O(i) big-integer updates, used in the large scans) and a truncated
power-series coefficient extraction; alpha_{k+2,k+1} likewise has a linear
closed form checked against a Lagrange-Buermann series oracle.  The scan
harness drives the criterion along the residue classes of the piecewise
shadow-bound values S_q(n) and reports minimal verified starting points.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction

from ._parallel import ordered_map
from .closed_form import BoundVerdict, Method
from .enumerators import EnumeratorVector, Kind
from .exact import PowerSeries, binomial, fraction_to_pair

# --- alpha coefficients -----------------------------------------------------


def alpha_i0(n: int, q: int, i: int) -> Fraction:
    """-(n(q-1)/i) sum_{j=0}^{i-1} (1-q)^j C(n-2i+j, n-2i) C(2i-2-j, i-1).

    The two binomials are updated incrementally (each step multiplies by an
    exact integer ratio), so one evaluation costs O(i) big-integer ops.
    """
    if not 1 <= i <= n // 2:
        raise ValueError(f"need 1 <= i <= floor(n/2), got i={i}, n={n}")
    total = 0
    b1 = 1  # C(n-2i+j, n-2i)
    b2 = binomial(2 * i - 2, i - 1)  # C(2i-2-j, i-1)
    sign_pow = 1  # (1-q)^j
    for j in range(i):
        total += sign_pow * b1 * b2
        if j < i - 1:
            sign_pow *= 1 - q
            b1 = b1 * (n - 2 * i + j + 1) // (j + 1)
            b2 = b2 * (i - 1 - j) // (2 * i - 2 - j)
    return Fraction(-n * (q - 1) * total, i)


def _binomial_series(c1, exponent: int, order: int) -> PowerSeries:
    """(1 + c1*y)^exponent truncated at `order`; negative exponents invert."""
    base = PowerSeries.linear(1, c1, order)
    if exponent >= 0:
        return base.pow(exponent)
    return base.pow(-exponent).inverse()


def alpha_i0_oracle(n: int, q: int, i: int) -> Fraction:
    """Same quantity via the series route:
    -(n(q-1)/i) [y^{i-1}] (1+(q-1)y)^{-(n+1-2i)} (1-y)^{-i}."""
    if not 1 <= i <= n // 2:
        raise ValueError(f"need 1 <= i <= floor(n/2), got i={i}, n={n}")
    order = i - 1
    a = _binomial_series(q - 1, -(n + 1 - 2 * i), order)
    b = _binomial_series(-1, -i, order)
    return Fraction(-n * (q - 1), i) * a.mul(b).coeff(i - 1)


def alpha_entry_oracle(n: int, q: int, i: int, j: int) -> Fraction:
    """Any alpha_{i,j} by Lagrange-Buermann coefficient extraction.

    alpha_{i,j} is the i-th coefficient of y^j/(1+(q-1)y)^n re-expanded in
    powers of g(y) = y(1-y)/(1+(q-1)y)^2, extracted as
    (1/i)[y^{i-1}] f'(y) (y/g(y))^i with f(y) = y^j (1+(q-1)y)^{-n}.
    """
    if not 0 <= j <= i <= n // 2:
        raise ValueError(f"need 0 <= j <= i <= floor(n/2), got i={i}, j={j}, n={n}")
    if i == 0:
        return Fraction(1 if j == 0 else 0)
    # f'(y) (y/g)^i = [ j y^{j-1} (1+(q-1)y)^{2i-n} - n(q-1) y^j (1+(q-1)y)^{2i-n-1} ] (1-y)^{-i}
    total = Fraction(0)
    if j >= 1 and i - j >= 0:
        order = i - j
        series = _binomial_series(q - 1, 2 * i - n, order).mul(_binomial_series(-1, -i, order))
        total += j * series.coeff(i - j)
    if i - 1 - j >= 0:
        order = i - 1 - j
        series = _binomial_series(q - 1, 2 * i - n - 1, order).mul(_binomial_series(-1, -i, order))
        total += -n * (q - 1) * series.coeff(i - 1 - j)
    return total / i


def alpha_offdiag(n: int, q: int, k: int) -> Fraction:
    """alpha_{k+2,k+1} = (k+1)(2q-1) - (q-1)n."""
    if k + 2 > n // 2:
        raise ValueError(f"need k+2 <= floor(n/2), got k={k}, n={n}")
    return Fraction((k + 1) * (2 * q - 1) - (q - 1) * n)


def lagrange_burmann_oracle(n: int, q: int, k: int) -> Fraction:
    """Series route for alpha_{k+2,k+1}; must agree with alpha_offdiag."""
    if k + 2 > n // 2:
        raise ValueError(f"need k+2 <= floor(n/2), got k={k}, n={n}")
    return alpha_entry_oracle(n, q, k + 2, k + 1)


@dataclass(frozen=True)
class AlphaTriangle:
    """The alpha entries the refinement criterion actually consumes.

    Closed forms cover the first column, the unit diagonal, and the single
    off-diagonal entry at (k+2, k+1); anything else goes through the series
    oracle via entry().
    """

    n: int
    q: int

    def first_column(self, i: int) -> Fraction:
        return alpha_i0(self.n, self.q, i)

    def diagonal(self, i: int) -> Fraction:
        if not 0 <= i <= self.n // 2:
            raise ValueError(f"need 0 <= i <= floor(n/2), got {i}")
        return Fraction(1)

    def offdiagonal(self, k: int) -> Fraction:
        return alpha_offdiag(self.n, self.q, k)

    def entry(self, i: int, j: int) -> Fraction:
        return alpha_entry_oracle(self.n, self.q, i, j)


# --- Gleason basis ----------------------------------------------------------


@dataclass(frozen=True)
class GleasonCoefficients:
    n: int
    q: int
    c: tuple[Fraction, ...]

    def __post_init__(self):
        if len(self.c) != self.n // 2 + 1:
            raise ValueError(f"expected {self.n // 2 + 1} coefficients, got {len(self.c)}")


def gleason_basis(n: int, q: int) -> list[tuple[Fraction, ...]]:
    """Coefficient vectors of (x+(q-1)y)^{n-2i} (y(x-y))^i, i = 0..floor(n/2)."""
    out = []
    for i in range(n // 2 + 1):
        vec = [Fraction(0)] * (n + 1)
        outer = [binomial(n - 2 * i, a) * (q - 1) ** a for a in range(n - 2 * i + 1)]
        for a, va in enumerate(outer):
            for t in range(i + 1):
                vec[a + i + t] += va * binomial(i, t) * (-1) ** t
        out.append(tuple(Fraction(v) for v in vec))
    return out


def gleason_from_weight(a: EnumeratorVector) -> GleasonCoefficients:
    """Invert the Gleason expansion for a MacWilliams-invariant enumerator.

    The y^i coefficient of basis element i is 1 and lower elements do not
    reach it, so the first floor(n/2)+1 coefficients determine c by forward
    substitution.  The expansion exists exactly for self-dual vectors; the
    reconstruction is checked and a non-representable input is rejected.
    """
    if a.kind is not Kind.WEIGHT:
        raise TypeError(f"expected a weight enumerator, got {a.kind.value}")
    n, q = a.n, a.q
    basis = gleason_basis(n, q)
    half = n // 2
    c = [Fraction(0)] * (half + 1)
    for i in range(half + 1):
        acc = a.values[i]
        for ip in range(i):
            if basis[ip][i] != 0:
                acc -= basis[ip][i] * c[ip]
        c[i] = acc
    recon = [Fraction(0)] * (n + 1)
    for i in range(half + 1):
        if c[i] == 0:
            continue
        for jj, b in enumerate(basis[i]):
            if b != 0:
                recon[jj] += c[i] * b
    if tuple(recon) != a.values:
        raise ValueError("enumerator is not MacWilliams self-dual: no exact expansion exists")
    return GleasonCoefficients(n, q, tuple(c))


def shadow_from_gleason(g: GleasonCoefficients) -> EnumeratorVector:
    """S(x,y) = sum_i (-1)^i c_i 2^{n-2i} q^{-i} y^{n-2i} (x^2-y^2)^i."""
    n, q = g.n, g.q
    values = [Fraction(0)] * (n + 1)
    for i, ci in enumerate(g.c):
        if ci == 0:
            continue
        outer = Fraction((-1) ** i * 2 ** (n - 2 * i), q**i) * ci
        for t in range(i + 1):
            j = n - 2 * i + 2 * t
            values[j] += outer * binomial(i, t) * (-1) ** t
    return EnumeratorVector(n, q, Kind.SHADOW, tuple(values))


# --- refinement criterion ---------------------------------------------------


def prop1_check(n: int, k: int, q: int) -> BoundVerdict:
    """Shadow refinement: nonexistent iff k odd, k <= floor(n/2)-2,
    beta = (k+1)(2q-1)-(q-1)n >= 0 and beta*alpha_{k+1,0} < alpha_{k+2,0}."""
    if q < 2:
        raise ValueError(f"q must be >= 2, got {q}")

    def inconclusive(reason):
        return BoundVerdict(n, k, q, Method.SHADOW_PROP1, exists_possible=True, reason=reason)

    if k < 1 or k % 2 == 0:
        return inconclusive("parity: criterion needs odd k >= 1")
    if k > n // 2 - 2:
        return inconclusive("range: criterion needs k <= floor(n/2) - 2")
    beta = (k + 1) * (2 * q - 1) - (q - 1) * n
    if beta < 0:
        return inconclusive(f"off-diagonal coefficient negative ({beta})")
    a1 = alpha_i0(n, q, k + 1)
    a2 = alpha_i0(n, q, k + 2)
    trace = {
        "beta": beta,
        "alpha_k1_0": fraction_to_pair(a1),
        "alpha_k2_0": fraction_to_pair(a2),
    }
    if beta * a1 < a2:
        return BoundVerdict(n, k, q, Method.SHADOW_PROP1, exists_possible=False, trace=trace)
    return BoundVerdict(
        n, k, q, Method.SHADOW_PROP1, exists_possible=True,
        reason="strict inequality fails", trace=trace,
    )


# --- piecewise shadow-bound values -----------------------------------------


class BoundStatus(str, enum.Enum):
    PROVEN = "proven"
    CONJECTURED = "conjectured"
    EXCEPTION = "exception"


_EXCEPTIONS = {3: frozenset({23, 37, 51}), 4: frozenset({38})}


@dataclass(frozen=True)
class ShadowBoundValue:
    q: int
    n: int
    value: int
    status: BoundStatus


def shadow_bound_value(q: int, n: int) -> ShadowBoundValue:
    """Piecewise shadow-bound value S_q(n); proven for q in {2,3},
    conjectured for q in {4,5}, with the known exceptional n flagged."""
    if q == 2:
        if n < 0:
            raise ValueError("n must be >= 0")
        m, r = divmod(n, 6)
        value = 2 * m + 2 if r == 5 else 2 * m + 1
        status = BoundStatus.PROVEN
    elif q == 3:
        if n < 10:
            raise ValueError(f"piecewise domain for q=3 starts at n=10, got {n}")
        m = (n + 4) // 14
        if n <= 14 * m - 1:
            value = 6 * m - 1
        elif n <= 14 * m + 4:
            value = 6 * m + 1
        else:
            value = 6 * m + 3
        status = BoundStatus.PROVEN
    elif q == 4:
        if n < 22:
            raise ValueError(f"piecewise domain for q=4 starts at n=22, got {n}")
        m = (n + 12) // 17
        if n <= 17 * m - 9:
            value = 8 * m - 5
        elif n <= 17 * m - 5:
            value = 8 * m - 3
        elif n <= 17 * m - 1:
            value = 8 * m - 1
        else:
            value = 8 * m + 1
        status = BoundStatus.CONJECTURED
    elif q == 5:
        if n < 180:
            raise ValueError(f"piecewise domain for q=5 starts at n=180, got {n}")
        value = 2 * (n // 4) - 1
        status = BoundStatus.CONJECTURED
    else:
        raise ValueError(f"shadow-bound values are defined for q in [2,5], got {q}")
    if n in _EXCEPTIONS.get(q, frozenset()):
        status = BoundStatus.EXCEPTION
    return ShadowBoundValue(q, n, value, status)


# --- scan harness -----------------------------------------------------------

_MODULUS = {3: 14, 4: 17, 5: 4}


@dataclass(frozen=True)
class ScanEntry:
    m: int
    n: int
    k: int | None
    fired: bool
    reason: str | None = None


@dataclass(frozen=True)
class ScanResult:
    """Per-residue scan of the refinement criterion at k = S_q(n) - l.

    minimal_m is the start of the terminal run [minimal_m, m_max] on which
    the criterion fires for every m; None when the run is broken at m_max
    (reported as 'none within m_max' rather than extrapolated).
    """

    q: int
    r: int
    l: int
    m_max: int
    entries: tuple[ScanEntry, ...]

    @property
    def minimal_m(self) -> int | None:
        fired = [e.fired for e in self.entries]
        if not fired or not fired[-1]:
            return None
        m = self.m_max
        while m > 1 and fired[m - 2]:
            m -= 1
        return m


def _scan_one(q: int, r: int, l: int, m: int) -> ScanEntry:
    n = _MODULUS[q] * m + r
    try:
        sb = shadow_bound_value(q, n)
    except ValueError as exc:
        return ScanEntry(m, n, None, False, f"outside domain: {exc}")
    if sb.status is BoundStatus.EXCEPTION:
        return ScanEntry(m, n, None, False, "excluded n for this shadow bound")
    k = sb.value - l
    verdict = prop1_check(n, k, q)
    return ScanEntry(m, n, k, verdict.nonexistent, verdict.reason)


def scan_refinement(q: int, r: int, l: int, m_max: int) -> ScanResult:
    if q not in _MODULUS:
        raise ValueError(f"scan supports q in {sorted(_MODULUS)}, got {q}")
    if l % 2 != 0 or l < 0:
        raise ValueError(f"l must be even and >= 0 (odd l makes k even), got {l}")
    if not 0 <= r < _MODULUS[q]:
        raise ValueError(f"residue r must lie in [0, {_MODULUS[q] - 1}], got {r}")
    if m_max < 1:
        raise ValueError("m_max must be >= 1")
    entries = ordered_map(lambda m: _scan_one(q, r, l, m), range(1, m_max + 1))
    return ScanResult(q, r, l, m_max, tuple(entries))
