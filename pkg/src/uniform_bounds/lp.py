"""Feasibility program for k-uniform enumerators, decided by exact simplex.

The primal program has one variable x_i per weight-enumerator coefficient
A_i, i in [k+1, n], and rows built from the binomial relation
q^i A'_i = sum_{j<=i} A_j C(n-j, i-j):

    row i, column j (j <= i):  C(n-j, i-j)        (unit lower triangular)
    i in [k+1, floor(n/2)]   :  >= 0
    i in [floor(n/2)+1,n-k-1]:  >= (q^{2i-n}-1) C(n,i)
    i in [n-k, n]            :  == (q^{2i-n}-1) C(n,i)
    all x_i >= 0

Infeasibility proves no k-uniform state exists on n parties of local
dimension q.  Every verdict is certified: a feasible point re-verifies by
substitution, an infeasible verdict carries Farkas multipliers that
re-verify without trusting the solver.

The solver eliminates the triangular equality block first (shrinking the
program and containing coefficient growth), then runs a phase-1 simplex
with Bland's pivoting rule on a fraction-free integer tableau, so
termination is guaranteed and no rounding can occur.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from math import gcd

from .exact import binomial, fraction_from_pair, fraction_to_pair

DEFAULT_PIVOT_LIMIT = 200_000
DEFAULT_LP_MAX_N = 128


class Relation(str, enum.Enum):
    GE = ">="
    EQ = "=="


@dataclass(frozen=True)
class Row:
    coeffs: tuple[Fraction, ...]
    relation: Relation
    rhs: Fraction


@dataclass(frozen=True)
class LinearProgram:
    num_vars: int
    rows: tuple[Row, ...]
    nonneg: tuple[bool, ...]

    def __post_init__(self):
        if len(self.nonneg) != self.num_vars:
            raise ValueError("nonneg flags must cover every variable")
        for r in self.rows:
            if len(r.coeffs) != self.num_vars:
                raise ValueError("row length does not match num_vars")


@dataclass(frozen=True)
class FarkasCertificate:
    """Row multipliers proving infeasibility.

    Nonnegative on >=-rows, free on ==-rows; the combined row has every
    coefficient <= 0 on nonnegative variables (== 0 on free ones) while the
    combined right-hand side is > 0, so no admissible x can exist.
    """

    multipliers: tuple[Fraction, ...]


@dataclass(frozen=True)
class Feasible:
    point: tuple[Fraction, ...]


@dataclass(frozen=True)
class Infeasible:
    certificate: FarkasCertificate


FeasibilityResult = Feasible | Infeasible


class BudgetExceeded(RuntimeError):
    """Pivot cap reached: the verdict is undecided, never wrong."""


class NotApplicable(ValueError):
    """A criterion's structural precondition fails for these parameters."""


def build_primal(n: int, k: int, q: int) -> LinearProgram:
    if q < 2:
        raise ValueError(f"q must be >= 2, got {q}")
    if not 0 <= k <= n // 2:
        raise ValueError(f"k must satisfy 0 <= k <= floor(n/2), got k={k}, n={n}")
    num_vars = n - k
    half = n // 2
    rows = []
    for i in range(k + 1, n + 1):
        coeffs = tuple(
            Fraction(binomial(n - j, i - j)) if j <= i else Fraction(0)
            for j in range(k + 1, n + 1)
        )
        if i <= half:
            rows.append(Row(coeffs, Relation.GE, Fraction(0)))
        elif i <= n - k - 1:
            rows.append(Row(coeffs, Relation.GE, Fraction((q ** (2 * i - n) - 1) * binomial(n, i))))
        else:
            rows.append(Row(coeffs, Relation.EQ, Fraction((q ** (2 * i - n) - 1) * binomial(n, i))))
    return LinearProgram(num_vars, tuple(rows), (True,) * num_vars)


def primal_row_index(n: int, k: int, i: int) -> int:
    """Position of constraint index i in build_primal(n, k, q).rows."""
    if not k + 1 <= i <= n:
        raise ValueError(f"constraint index {i} outside [k+1, n] = [{k + 1}, {n}]")
    return i - (k + 1)


def verify_point(lp: LinearProgram, point) -> bool:
    point = tuple(Fraction(v) for v in point)
    if len(point) != lp.num_vars:
        raise ValueError("point dimension mismatch")
    for flag, v in zip(lp.nonneg, point):
        if flag and v < 0:
            return False
    for row in lp.rows:
        lhs = sum((c * v for c, v in zip(row.coeffs, point) if c != 0), Fraction(0))
        if row.relation is Relation.EQ and lhs != row.rhs:
            return False
        if row.relation is Relation.GE and lhs < row.rhs:
            return False
    return True


def verify_farkas(lp: LinearProgram, cert: FarkasCertificate) -> bool:
    lam = cert.multipliers
    if len(lam) != len(lp.rows):
        raise ValueError("multiplier dimension mismatch")
    combined = [Fraction(0)] * lp.num_vars
    rhs = Fraction(0)
    for row, l in zip(lp.rows, lam):
        if row.relation is Relation.GE and l < 0:
            return False
        if l == 0:
            continue
        for j, c in enumerate(row.coeffs):
            if c != 0:
                combined[j] += l * c
        rhs += l * row.rhs
    for flag, c in zip(lp.nonneg, combined):
        if flag and c > 0:
            return False
        if not flag and c != 0:
            return False
    return rhs > 0


class _InfeasibleFound(Exception):
    def __init__(self, lam: dict[int, Fraction]):
        self.lam = lam


def _eliminate_equalities(lp: LinearProgram):
    """Substitute out equality rows by Gaussian pivots (highest-index column).

    Returns (work, subs) where work is a list of >=-rows
    [coeffs, rhs, provenance] with provenance mapping original row index to
    the multiplier expressing the derived row as a combination of original
    rows, and subs maps an eliminated variable to its affine expression.
    For the k-uniform primal the equality block is unit lower triangular,
    so no denominators are introduced here.
    """
    work = [[list(r.coeffs), r.rhs, {t: Fraction(1)}, r.relation] for t, r in enumerate(lp.rows)]
    subs: dict[int, tuple[list[Fraction], Fraction]] = {}
    for w in [w for w in work if w[3] is Relation.EQ]:
        coeffs, rhs, prov = w[0], w[1], w[2]
        pivot = max((j for j in range(lp.num_vars) if coeffs[j] != 0), default=None)
        if pivot is None:
            if rhs != 0:
                s = 1 if rhs > 0 else -1
                raise _InfeasibleFound({t: s * v for t, v in prov.items()})
            work.remove(w)
            continue
        alpha = coeffs[pivot]
        csnap, rsnap, psnap = list(coeffs), rhs, dict(prov)
        for other in work:
            if other is w:
                continue
            beta = other[0][pivot]
            if beta == 0:
                continue
            ratio = beta / alpha
            other[0] = [a - ratio * b for a, b in zip(other[0], csnap)]
            other[1] = other[1] - ratio * rsnap
            for t, v in psnap.items():
                nv = other[2].get(t, Fraction(0)) - ratio * v
                if nv == 0:
                    other[2].pop(t, None)
                else:
                    other[2][t] = nv
        work.remove(w)
        sub_c = [c / alpha if j != pivot else Fraction(0) for j, c in enumerate(csnap)]
        subs[pivot] = (sub_c, rsnap / alpha)
        if lp.nonneg[pivot]:
            # the eliminated variable's bound x_p >= 0 survives as a row
            work.append(
                [
                    [-c for c in sub_c],
                    -rsnap / alpha,
                    {t: -v / alpha for t, v in psnap.items()},
                    Relation.GE,
                ]
            )
    return [(w[0], w[1], w[2]) for w in work], subs


def _phase1_integer(lp: LinearProgram, work, avail, pivot_limit: int):
    """Phase-1 simplex over a fraction-free integer tableau.

    All tableau entries stay integers sharing the previous pivot as common
    denominator (two-term minor update, division always exact).  Bland's
    rule picks the entering column, so cycling is impossible.  Returns a
    feasible assignment for the remaining variables or raises
    _InfeasibleFound with Farkas multipliers over the original rows.
    """
    rows = []
    for coeffs, rhs, prov in work:
        if rhs <= 0 and all(coeffs[j] >= 0 for j in avail):
            continue  # implied by x >= 0
        if rhs > 0 and all(coeffs[j] <= 0 for j in avail):
            raise _InfeasibleFound(dict(prov))
        rows.append((coeffs, rhs, prov))
    if not rows:
        return {j: Fraction(0) for j in avail}

    m = len(rows)
    cols = list(avail)
    ncol = len(cols)
    scale = []  # (sign flip, denominator clearing factor) per row
    art: dict[int, int] = {}
    ncols = ncol + m
    pre = []
    for r, (coeffs, rhs, _) in enumerate(rows):
        lcm = 1
        for j in cols:
            den = Fraction(coeffs[j]).denominator
            lcm = lcm * den // gcd(lcm, den)
        den = Fraction(rhs).denominator
        lcm = lcm * den // gcd(lcm, den)
        row = [int(coeffs[j] * lcm) for j in cols] + [0] * m
        rhs_i = int(rhs * lcm)
        row[ncol + r] = -1  # surplus: a.x - s = rhs
        if rhs_i > 0:
            scale.append((1, lcm))
            art[r] = ncols
            ncols += 1
        else:
            scale.append((-1, lcm))  # flip whole row so the surplus is basic
            row = [-x for x in row]
            rhs_i = -rhs_i
        pre.append((row, rhs_i))

    tableau = []
    basis = [0] * m
    for r in range(m):
        row, rhs_i = pre[r]
        full = row + [0] * (ncols - len(row)) + [rhs_i]
        if r in art:
            full[art[r]] = 1
            basis[r] = art[r]
        else:
            basis[r] = ncol + r
        tableau.append(full)
    artcols = set(art.values())

    if artcols:
        z = [0] * (ncols + 1)
        for r in range(m):
            if basis[r] in artcols:
                for j in range(ncols + 1):
                    z[j] += tableau[r][j]
        denom = 1
        pivots = 0
        while True:
            enter = -1
            for j in range(ncols):
                if j not in artcols and z[j] > 0:
                    enter = j
                    break
            if enter < 0:
                break
            leave = -1
            best_num = best_den = 0
            for r in range(m):
                a = tableau[r][enter]
                if a > 0:
                    num = tableau[r][ncols]
                    if (
                        leave < 0
                        or num * best_den < best_num * a
                        or (num * best_den == best_num * a and basis[r] < basis[leave])
                    ):
                        leave, best_num, best_den = r, num, a
            if leave < 0:
                raise AssertionError("phase-1 objective cannot be unbounded")
            pv = tableau[leave][enter]
            prow = tableau[leave]
            for r in range(m):
                if r == leave:
                    continue
                a = tableau[r][enter]
                if a == 0:
                    tableau[r] = [(x * pv) // denom for x in tableau[r]]
                else:
                    tableau[r] = [(x * pv - a * y) // denom for x, y in zip(tableau[r], prow)]
            a = z[enter]
            if a == 0:
                z = [(x * pv) // denom for x in z]
            else:
                z = [(x * pv - a * y) // denom for x, y in zip(z, prow)]
            denom = pv
            basis[leave] = enter
            pivots += 1
            if pivots > pivot_limit:
                raise BudgetExceeded(f"undecided (budget): pivot limit {pivot_limit} reached")

        if z[ncols] > 0:
            # phase-1 duals off the z-row give the Farkas combination
            lam: dict[int, Fraction] = {}
            for r in range(m):
                flip, lcm = scale[r]
                if r in art:
                    y_r = Fraction(z[art[r]], denom)
                else:
                    y_r = Fraction(-flip * z[ncol + r], denom)
                mult = y_r * flip * lcm
                if mult != 0:
                    for t, v in rows[r][2].items():
                        lam[t] = lam.get(t, Fraction(0)) + mult * v
            raise _InfeasibleFound(lam)
    else:
        denom = 1

    out = {j: Fraction(0) for j in avail}
    for r in range(m):
        if basis[r] < ncol:
            out[cols[basis[r]]] = Fraction(tableau[r][ncols], denom)
    return out


def solve_feasibility(lp: LinearProgram, pivot_limit: int = DEFAULT_PIVOT_LIMIT) -> FeasibilityResult:
    """Decide feasibility exactly; every verdict is re-verified before return."""
    if not all(lp.nonneg):
        raise NotImplementedError("free variables are not used by the enumerator programs")
    try:
        work, subs = _eliminate_equalities(lp)
        avail = [j for j in range(lp.num_vars) if j not in subs]
        assign = _phase1_integer(lp, work, avail, pivot_limit)
        # a substitution may reference pivots eliminated after it, so walk
        # the eliminations newest-first
        for p, (sub_c, sub_rhs) in reversed(list(subs.items())):
            assign[p] = sub_rhs - sum(
                (sub_c[j] * assign[j] for j in range(lp.num_vars) if j != p and sub_c[j] != 0),
                Fraction(0),
            )
        point = tuple(assign[j] for j in range(lp.num_vars))
        if not verify_point(lp, point):
            raise AssertionError("solver returned a point that fails re-verification")
        return Feasible(point)
    except _InfeasibleFound as found:
        multipliers = tuple(found.lam.get(t, Fraction(0)) for t in range(len(lp.rows)))
        cert = FarkasCertificate(multipliers)
        if not verify_farkas(lp, cert):
            raise AssertionError("solver returned a certificate that fails re-verification")
        return Infeasible(cert)


# --- dual certificates ------------------------------------------------------


@dataclass(frozen=True)
class DualCertificate:
    """Dual vector p over [k+1, n] witnessing primal infeasibility.

    Validity requires p_i >= 0 for i in [k+1, n-k-1] (entries at
    [n-k, n] are free), every column combination
    sum_{i>=j} p_i C(n-j, i-j) <= 0, and a strictly positive pairing with
    the right-hand side.
    """

    n: int
    k: int
    q: int
    p: dict[int, Fraction]

    def entry(self, i: int) -> Fraction:
        return self.p.get(i, Fraction(0))


@dataclass(frozen=True)
class DualCheckResult:
    ok: bool
    failure: str | None = None  # "sign_pattern" | "column_condition" | "objective_condition"

    def __bool__(self) -> bool:
        return self.ok


def verify_dual_certificate(cert: DualCertificate) -> DualCheckResult:
    n, k, q = cert.n, cert.k, cert.q
    for i in cert.p:
        if not k + 1 <= i <= n:
            return DualCheckResult(False, "sign_pattern")
    for i in range(k + 1, n - k):
        if cert.entry(i) < 0:
            return DualCheckResult(False, "sign_pattern")
    for j in range(k + 1, n + 1):
        total = sum((cert.entry(i) * binomial(n - j, i - j) for i in range(j, n + 1)), Fraction(0))
        if total > 0:
            return DualCheckResult(False, "column_condition")
    pairing = sum(
        (cert.entry(i) * (q ** (2 * i - n) - 1) * binomial(n, i) for i in range(n // 2 + 1, n + 1)),
        Fraction(0),
    )
    if pairing <= 0:
        return DualCheckResult(False, "objective_condition")
    return DualCheckResult(True)


def two_support_certificate(n: int, k: int, q: int) -> DualCertificate | None:
    """Dual certificate supported on u = floor(n/2)+1 and v = n-k.

    p_v = -1 and p_u sits at its largest admissible value
    C(n-k-1, n-v)/C(n-k-1, n-u); the certificate is valid exactly when the
    strict binomial-ratio inequality holds, in which case it is returned
    (already re-verified).  Returns None when the inequality fails.
    """
    if q < 2:
        raise ValueError(f"q must be >= 2, got {q}")
    u = n // 2 + 1
    v = n - k
    if k > n // 2 - 1 or not u < v:
        raise NotApplicable(f"two-support certificate needs u < v; got u={u}, v={v}")
    p_u = Fraction(binomial(n - k - 1, n - v), binomial(n - k - 1, n - u))
    lhs = p_u
    rhs = Fraction((q ** (2 * v - n) - 1) * binomial(n, v), (q ** (2 * u - n) - 1) * binomial(n, u))
    if not lhs > rhs:
        return None
    cert = DualCertificate(n, k, q, {u: p_u, v: Fraction(-1)})
    check = verify_dual_certificate(cert)
    if not check.ok:
        raise AssertionError(f"two-support certificate failed re-verification: {check.failure}")
    return cert


def two_support_comparison(n: int, k: int, q: int) -> tuple[Fraction, Fraction]:
    """The two exact rationals compared by the two-support criterion."""
    u = n // 2 + 1
    v = n - k
    if k > n // 2 - 1 or not u < v:
        raise NotApplicable(f"two-support criterion needs u < v; got u={u}, v={v}")
    lhs = Fraction(binomial(n - k - 1, n - v), binomial(n - k - 1, n - u))
    rhs = Fraction((q ** (2 * v - n) - 1) * binomial(n, v), (q ** (2 * u - n) - 1) * binomial(n, u))
    return lhs, rhs


# --- certificate JSON -------------------------------------------------------
#
# {"type": "farkas" | "dual_two_support", "n":..., "k":..., "q":...,
#  "entries": [[index, "num", "den"], ...]}
#
# Farkas entries are indexed by the constraint index i in [k+1, n] of the
# canonical primal for (n, k, q); dual entries by the dual index i.  The
# verifier rebuilds everything it needs from (n, k, q), so a third party
# can audit a claim without running any solver.


def farkas_to_json(n: int, k: int, q: int, cert: FarkasCertificate) -> dict:
    entries = []
    for pos, mult in enumerate(cert.multipliers):
        if mult != 0:
            entries.append([k + 1 + pos, *fraction_to_pair(mult)])
    return {"type": "farkas", "n": n, "k": k, "q": q, "entries": entries}


def dual_to_json(cert: DualCertificate) -> dict:
    entries = [[i, *fraction_to_pair(v)] for i, v in sorted(cert.p.items()) if v != 0]
    return {"type": "dual_two_support", "n": cert.n, "k": cert.k, "q": cert.q, "entries": entries}


class CertificateFormatError(ValueError):
    pass


def verify_certificate_json(doc: dict) -> DualCheckResult:
    """Solver-free audit of a serialized certificate."""
    try:
        ctype = doc["type"]
        n, k, q = int(doc["n"]), int(doc["k"]), int(doc["q"])
        entries = [(int(i), fraction_from_pair((num, den))) for i, num, den in doc["entries"]]
    except (KeyError, TypeError, ValueError) as exc:
        raise CertificateFormatError(f"malformed certificate document: {exc}") from exc
    if ctype == "dual_two_support":
        return verify_dual_certificate(DualCertificate(n, k, q, dict(entries)))
    if ctype == "farkas":
        lp = build_primal(n, k, q)
        multipliers = [Fraction(0)] * len(lp.rows)
        for i, v in entries:
            if not k + 1 <= i <= n:
                return DualCheckResult(False, "sign_pattern")
            multipliers[primal_row_index(n, k, i)] = v
        ok = verify_farkas(lp, FarkasCertificate(tuple(multipliers)))
        return DualCheckResult(ok, None if ok else "column_condition")
    raise CertificateFormatError(f"unknown certificate type {ctype!r}")
