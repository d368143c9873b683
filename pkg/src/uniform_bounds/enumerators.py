"""Enumerator vectors of a pure state and the transforms between them.

Four coefficient vectors are attached to a pure state on n parties of local
dimension q: the weight enumerator A, its MacWilliams dual B, the unitary
(subset-purity) enumerator A', and the shadow enumerator S.  They are
related by linear substitutions on the underlying homogeneous polynomials:

    B(x,y)  = A((x + (q^2-1)y)/q, (x - y)/q)
    A(x,y)  = A'(x - y, qy)          A'(x,y) = A(x + y/q, y/q)
    S(x,y)  = A'(x + y, y - x)       S(x,y)  = A(((q-1)x + (q+1)y)/q, (y-x)/q)

This module operates purely on coefficient vectors; it never touches a
density matrix.  A k-uniform state pins A'_i = C(n,i)/q^i for i <= k and
bounds A'_i from below in the middle range, which is what the linear
program downstream consumes.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction

from .exact import HomogeneousPoly, binomial, fraction_from_pair, fraction_to_pair, substitute_linear


class Kind(str, enum.Enum):
    WEIGHT = "weight"
    DUAL_WEIGHT = "dual_weight"
    UNITARY = "unitary"
    SHADOW = "shadow"


@dataclass(frozen=True)
class EnumeratorVector:
    n: int
    q: int
    kind: Kind
    values: tuple[Fraction, ...]

    def __post_init__(self):
        object.__setattr__(self, "values", tuple(Fraction(v) for v in self.values))
        if self.q < 2:
            raise ValueError(f"local dimension q must be >= 2, got {self.q}")
        if len(self.values) != self.n + 1:
            raise ValueError(f"expected {self.n + 1} coefficients, got {len(self.values)}")

    def poly(self) -> HomogeneousPoly:
        return HomogeneousPoly(self.values)

    def to_json_dict(self) -> dict:
        return {
            "n": self.n,
            "q": self.q,
            "kind": self.kind.value,
            "values": [fraction_to_pair(v) for v in self.values],
        }

    @staticmethod
    def from_json_dict(d: dict) -> "EnumeratorVector":
        return EnumeratorVector(
            n=int(d["n"]),
            q=int(d["q"]),
            kind=Kind(d["kind"]),
            values=tuple(fraction_from_pair(p) for p in d["values"]),
        )


class KindError(TypeError):
    """An enumerator transform was applied to the wrong kind of vector."""


def _require_kind(vec: EnumeratorVector, *kinds: Kind):
    if vec.kind not in kinds:
        expected = " or ".join(k.value for k in kinds)
        raise KindError(f"expected a {expected} enumerator, got {vec.kind.value}")


def _transformed(vec: EnumeratorVector, kind: Kind, a, b, c, d) -> EnumeratorVector:
    out = substitute_linear(vec.poly(), a, b, c, d)
    return EnumeratorVector(vec.n, vec.q, kind, out.coeffs)


def macwilliams_dual(a: EnumeratorVector) -> EnumeratorVector:
    """B(x,y) = A((x + (q^2-1)y)/q, (x - y)/q).  Involutive."""
    _require_kind(a, Kind.WEIGHT, Kind.DUAL_WEIGHT)
    q = a.q
    kind = Kind.DUAL_WEIGHT if a.kind is Kind.WEIGHT else Kind.WEIGHT
    return _transformed(a, kind, Fraction(1, q), Fraction(q * q - 1, q), Fraction(1, q), Fraction(-1, q))


def weight_to_unitary(a: EnumeratorVector) -> EnumeratorVector:
    """A'(x,y) = A(x + y/q, y/q)."""
    _require_kind(a, Kind.WEIGHT)
    q = a.q
    return _transformed(a, Kind.UNITARY, 1, Fraction(1, q), 0, Fraction(1, q))


def unitary_to_weight(ap: EnumeratorVector) -> EnumeratorVector:
    """A(x,y) = A'(x - y, qy).  Exact inverse of weight_to_unitary."""
    _require_kind(ap, Kind.UNITARY)
    return _transformed(ap, Kind.WEIGHT, 1, -1, 0, ap.q)


def shadow_transform(vec: EnumeratorVector) -> EnumeratorVector:
    """Shadow enumerator from either the unitary or the weight vector.

    Both displayed routes are computed and cross-checked against each other;
    a mismatch would indicate memory corruption or a broken substitution, so
    it is raised rather than returned.
    """
    _require_kind(vec, Kind.WEIGHT, Kind.UNITARY)
    q = vec.q
    if vec.kind is Kind.UNITARY:
        direct = _transformed(vec, Kind.SHADOW, 1, 1, -1, 1)
        other = shadow_transform(unitary_to_weight(vec))
    else:
        direct = _transformed(
            vec, Kind.SHADOW, Fraction(q - 1, q), Fraction(q + 1, q), Fraction(-1, q), Fraction(1, q)
        )
        other = _transformed(weight_to_unitary(vec), Kind.SHADOW, 1, 1, -1, 1)
    if direct.values != other.values:
        raise AssertionError("shadow transform cross-check failed (weight vs unitary route)")
    return direct


def binomial_relation(a: EnumeratorVector, i: int) -> Fraction:
    """sum_{j<=i} A_j C(n-j, i-j); equals q^i * (unitary vector)_i."""
    _require_kind(a, Kind.WEIGHT)
    if not 0 <= i <= a.n:
        raise ValueError(f"index {i} outside [0, {a.n}]")
    return sum((a.values[j] * binomial(a.n - j, i - j) for j in range(i + 1)), Fraction(0))


@dataclass(frozen=True)
class UniformityContext:
    n: int
    q: int
    k: int

    def __post_init__(self):
        if self.n < 1 or self.q < 2 or not 0 <= self.k <= self.n:
            raise ValueError(f"invalid uniformity context (n={self.n}, q={self.q}, k={self.k})")


class SingletonViolation(ValueError):
    """k exceeds floor(n/2); no such k-uniform state can exist at all."""


@dataclass(frozen=True)
class KUniformTargets:
    """Constraints on the unitary enumerator of a k-uniform state.

    prescribed:    A'_i = C(n,i)/q^i for i <= k
    lower_bounds:  A'_i >= C(n,i)/q^i for k < i <= floor(n/2)
    symmetry:      A'_i = A'_{n-i} for every i  (pairs with i < n-i)
    """

    ctx: UniformityContext
    prescribed: dict[int, Fraction]
    lower_bounds: dict[int, Fraction]
    symmetry: tuple[tuple[int, int], ...]


def kuniform_targets(ctx: UniformityContext) -> KUniformTargets:
    n, q, k = ctx.n, ctx.q, ctx.k
    if k > n // 2:
        raise SingletonViolation(f"k={k} exceeds floor(n/2)={n // 2}")
    prescribed = {i: Fraction(binomial(n, i), q**i) for i in range(k + 1)}
    lower = {i: Fraction(binomial(n, i), q**i) for i in range(k + 1, n // 2 + 1)}
    pairs = tuple((i, n - i) for i in range(n + 1) if i < n - i)
    return KUniformTargets(ctx, prescribed, lower, pairs)


@dataclass(frozen=True)
class ConsistencyReport:
    """Identities that every pure-state weight enumerator must satisfy.

    Violations are data, not errors: the report lists each failed identity
    so a caller can see *why* a candidate vector cannot come from a state.
    """

    violations: tuple[str, ...]

    @property
    def consistent(self) -> bool:
        return not self.violations


def check_pure_state_consistency(a: EnumeratorVector) -> ConsistencyReport:
    _require_kind(a, Kind.WEIGHT)
    bad: list[str] = []
    if a.values[0] != 1:
        bad.append(f"A_0 = {a.values[0]} != 1")
    for i, v in enumerate(a.values):
        if v < 0:
            bad.append(f"A_{i} = {v} < 0")
    dual = macwilliams_dual(a)
    if dual.values != a.values:
        bad.append("A != B (not MacWilliams self-dual)")
    ap = weight_to_unitary(a)
    for i in range(a.n + 1):
        if ap.values[i] != ap.values[a.n - i]:
            bad.append(f"A'_{i} != A'_{a.n - i}")
            break
    s = shadow_transform(a)
    for j, v in enumerate(s.values):
        if v < 0:
            bad.append(f"S_{j} = {v} < 0")
    for j in range(1, a.n + 1, 2):  # odd j; coefficient index n-j
        if s.values[a.n - j] != 0:
            bad.append(f"S_{a.n - j} != 0 (odd complement)")
    return ConsistencyReport(tuple(bad))
