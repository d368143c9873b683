import json
import random
from fractions import Fraction as F

import pytest

from uniform_bounds.enumerators import (
    EnumeratorVector,
    Kind,
    KindError,
    SingletonViolation,
    UniformityContext,
    binomial_relation,
    check_pure_state_consistency,
    kuniform_targets,
    macwilliams_dual,
    shadow_transform,
    unitary_to_weight,
    weight_to_unitary,
)
from uniform_bounds.exact import binomial

BELL = EnumeratorVector(2, 2, Kind.WEIGHT, (1, 0, 3))


def random_weight_vector(rng, n_max=20, q_choices=(2, 3, 4, 5)):
    n = rng.randint(1, n_max)
    q = rng.choice(q_choices)
    values = tuple(F(rng.randint(-9, 9), rng.randint(1, 5)) for _ in range(n + 1))
    return EnumeratorVector(n, q, Kind.WEIGHT, values)


class TestMacWilliams:
    def test_bell_self_dual(self):
        assert macwilliams_dual(BELL).values == (1, 0, 3)

    def test_pure_power_of_x(self):
        for q in (2, 3, 5):
            n = 6
            a = EnumeratorVector(n, q, Kind.WEIGHT, (1,) + (0,) * n)
            b = macwilliams_dual(a)
            expected = tuple(F(binomial(n, i) * (q * q - 1) ** i, q**n) for i in range(n + 1))
            assert b.values == expected

    def test_involution(self):
        rng = random.Random(11)
        for _ in range(200):
            a = random_weight_vector(rng)
            round_trip = macwilliams_dual(macwilliams_dual(a))
            assert round_trip.values == a.values
            assert round_trip.kind is Kind.WEIGHT

    def test_kind_enforced(self):
        ap = weight_to_unitary(BELL)
        with pytest.raises(KindError):
            macwilliams_dual(ap)


class TestUnitary:
    def test_bell(self):
        assert weight_to_unitary(BELL).values == (1, 1, 1)

    def test_pure_power_of_x(self):
        for q in (2, 3, 4):
            n = 5
            a = EnumeratorVector(n, q, Kind.WEIGHT, (1,) + (0,) * n)
            ap = weight_to_unitary(a)
            assert ap.values == tuple(F(binomial(n, i), q**i) for i in range(n + 1))

    def test_round_trip(self):
        rng = random.Random(12)
        for _ in range(200):
            a = random_weight_vector(rng)
            assert unitary_to_weight(weight_to_unitary(a)).values == a.values

    def test_kind_enforced(self):
        with pytest.raises(KindError):
            unitary_to_weight(BELL)


class TestBinomialRelation:
    def test_index_zero(self):
        assert binomial_relation(BELL, 0) == 1

    def test_bell_index_two(self):
        # 1*C(2,2) + 0 + 3 = 4 = q^2 * A'_2
        assert binomial_relation(BELL, 2) == 4
        assert binomial_relation(BELL, 2) == 4 * weight_to_unitary(BELL).values[2]

    def test_matches_unitary_for_random_vectors(self):
        rng = random.Random(13)
        for _ in range(50):
            a = random_weight_vector(rng, n_max=12)
            ap = weight_to_unitary(a)
            for i in range(a.n + 1):
                assert binomial_relation(a, i) == a.q**i * ap.values[i]

    def test_ame_8_4_row_five(self):
        # with the 4-uniform prescription A_0=1, A_1..A_4=0 the relation at
        # i=5 reads C(8,5) + A_5; plugging the forced A_5 = 168 gives
        # 224 = 2^5 * A'_5, i.e. A'_5 = 7 = C(8,3)/2^3
        a = EnumeratorVector(8, 2, Kind.WEIGHT, (1, 0, 0, 0, 0, 168, 0, 0, 0))
        assert binomial_relation(a, 5) == binomial(8, 5) + 168 == 224
        assert weight_to_unitary(a).values[5] * 2**5 == 224


class TestShadow:
    def test_bell_from_unitary(self):
        ap = EnumeratorVector(2, 2, Kind.UNITARY, (1, 1, 1))
        assert shadow_transform(ap).values == (1, 0, 3)

    def test_both_routes_agree(self):
        rng = random.Random(14)
        for _ in range(100):
            a = random_weight_vector(rng, n_max=14)
            via_weight = shadow_transform(a)
            via_unitary = shadow_transform(weight_to_unitary(a))
            assert via_weight.values == via_unitary.values

    def test_palindrome_kills_odd_complement(self):
        rng = random.Random(15)
        for _ in range(50):
            n = rng.randint(2, 14)
            q = rng.choice((2, 3, 4))
            half = [F(rng.randint(-9, 9), rng.randint(1, 3)) for _ in range(n // 2 + 1)]
            values = half + half[: (n + 1) // 2][::-1]
            ap = EnumeratorVector(n, q, Kind.UNITARY, tuple(values))
            assert ap.values == ap.values[::-1]
            s = shadow_transform(ap)
            for j in range(1, n + 1, 2):
                assert s.values[n - j] == 0

    def test_kind_enforced(self):
        s = shadow_transform(BELL)
        with pytest.raises(KindError):
            shadow_transform(s)


class TestKUniformTargets:
    def test_n4_q2_k1(self):
        t = kuniform_targets(UniformityContext(4, 2, 1))
        assert t.prescribed == {0: 1, 1: 2}
        assert t.lower_bounds == {2: F(3, 2)}
        assert (0, 4) in t.symmetry and (1, 3) in t.symmetry

    def test_bell_targets_close_to_exact_vector(self):
        t = kuniform_targets(UniformityContext(2, 2, 1))
        assert t.prescribed == {0: 1, 1: 1}
        assert t.lower_bounds == {}
        # symmetry A'_2 = A'_0 pins the whole vector to (1, 1, 1)
        assert t.symmetry == ((0, 2),)

    def test_k0_prescribes_only_index_zero(self):
        t = kuniform_targets(UniformityContext(6, 3, 0))
        assert t.prescribed == {0: 1}
        assert set(t.lower_bounds) == {1, 2, 3}

    def test_singleton_guard(self):
        with pytest.raises(SingletonViolation):
            kuniform_targets(UniformityContext(4, 2, 3))


class TestConsistency:
    def test_bell_passes(self):
        assert check_pure_state_consistency(BELL).consistent

    def test_negative_coefficient(self):
        report = check_pure_state_consistency(EnumeratorVector(2, 2, Kind.WEIGHT, (1, 0, -1)))
        assert any("< 0" in v for v in report.violations)

    def test_wrong_normalization(self):
        report = check_pure_state_consistency(EnumeratorVector(2, 2, Kind.WEIGHT, (2, 0, 0)))
        assert any("A_0" in v for v in report.violations)


def test_json_round_trip():
    doc = BELL.to_json_dict()
    text = json.dumps(doc)
    back = EnumeratorVector.from_json_dict(json.loads(text))
    assert back == BELL
    assert doc["values"][2] == ["3", "1"]
