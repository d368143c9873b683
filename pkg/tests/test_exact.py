import math
import random
from fractions import Fraction as F

import pytest

from uniform_bounds.exact import (
    HomogeneousPoly,
    PowerSeries,
    binomial,
    fraction_from_pair,
    fraction_to_pair,
    series_derive,
    series_inverse,
    series_mul,
    substitute_linear,
)


def factorial_binomial(n, k):
    """Independent oracle: C(n,k) as a ratio of factorials."""
    if k < 0 or k > n:
        return 0
    return math.factorial(n) // (math.factorial(k) * math.factorial(n - k))


class TestBinomial:
    def test_small(self):
        assert binomial(8, 3) == 56

    def test_out_of_range_is_zero(self):
        assert binomial(5, 7) == 0
        assert binomial(5, -1) == 0

    def test_against_factorial_oracle(self):
        assert binomial(114, 5) == factorial_binomial(114, 5) == 146803272
        for n, k in [(0, 0), (1, 1), (20, 10), (200, 3), (200, 100), (63, 17)]:
            assert binomial(n, k) == factorial_binomial(n, k)

    def test_pascal_rule(self):
        for n in range(1, 201):
            for k in range(n + 1):
                assert binomial(n, k) == binomial(n - 1, k) + binomial(n - 1, k - 1)

    def test_negative_n_rejected(self):
        with pytest.raises(ValueError):
            binomial(-1, 0)


class TestPowerSeries:
    def test_geometric_inverse(self):
        s = PowerSeries.linear(1, -1, 3)  # 1 - y
        assert s.inverse().coeffs == (F(1), F(1), F(1), F(1))

    def test_derivative_of_monomial(self):
        k = 4
        coeffs = [F(0)] * (k + 2)
        coeffs[k + 1] = F(1)
        d = series_derive(PowerSeries(tuple(coeffs)))
        expected = [F(0)] * (k + 1)
        expected[k] = F(k + 1)
        assert d.coeffs == tuple(expected)

    def test_negative_binomial_coefficient(self):
        # [y^j] (1+(q-1)y)^{-m} = (-1)^j C(m+j-1, j) (q-1)^j; q=3, m=2, j=2 -> 12.
        # Oracle: direct series division, i.e. inverting the squared linear factor.
        q, m, j = 3, 2, 2
        series = PowerSeries.linear(1, q - 1, j).pow(m).inverse()
        assert series.coeff(j) == F(12)
        assert series.coeff(j) == (-1) ** j * binomial(m + j - 1, j) * (q - 1) ** j

    def test_mul_inverse_is_one(self):
        rng = random.Random(20240901)
        for _ in range(25):
            T = rng.randint(1, 12)
            coeffs = [F(rng.randint(1, 9))] + [
                F(rng.randint(-9, 9), rng.randint(1, 4)) for _ in range(T)
            ]
            s = PowerSeries(tuple(coeffs))
            product = series_mul(s, series_inverse(s))
            assert product.coeffs == PowerSeries.one(T).coeffs

    def test_inverse_requires_nonzero_constant(self):
        with pytest.raises(ZeroDivisionError):
            series_inverse(PowerSeries((F(0), F(1))))

    def test_coefficient_depends_only_on_prefix(self):
        # coefficient i of a product must not change when the operands carry
        # more coefficients past the truncation order
        rng = random.Random(7)
        a = [F(rng.randint(-5, 5)) for _ in range(10)]
        b = [F(rng.randint(-5, 5)) for _ in range(10)]
        a[0], b[0] = F(1), F(2)
        short = PowerSeries(tuple(a[:5])).mul(PowerSeries(tuple(b[:5])))
        long = PowerSeries(tuple(a)).mul(PowerSeries(tuple(b)))
        for i in range(5):
            assert short.coeff(i) == long.coeff(i)
        inv_short = PowerSeries(tuple(a[:5])).inverse()
        inv_long = PowerSeries(tuple(a)).inverse()
        for i in range(5):
            assert inv_short.coeff(i) == inv_long.coeff(i)

    def test_coefficient_past_truncation_rejected(self):
        with pytest.raises(IndexError):
            PowerSeries((F(1), F(2))).coeff(2)


def random_poly(rng, n):
    return HomogeneousPoly(tuple(F(rng.randint(-6, 6), rng.randint(1, 3)) for _ in range(n + 1)))


class TestSubstituteLinear:
    def test_identity(self):
        p = HomogeneousPoly((F(1), F(0), F(3)))  # x^2 + 3y^2
        assert substitute_linear(p, 1, 0, 0, 1).coeffs == p.coeffs

    def test_bell_self_duality(self):
        # hand expansion: ((x+3y)/2)^2 + 3((x-y)/2)^2 = x^2 + 3y^2
        p = HomogeneousPoly((F(1), F(0), F(3)))
        q = 2
        out = substitute_linear(p, F(1, q), F(q * q - 1, q), F(1, q), F(-1, q))
        assert out.coeffs == p.coeffs

    def test_binomial_theorem(self):
        n = 7
        p = HomogeneousPoly(tuple(F(0) for _ in range(n)) + (F(1),))  # y^n
        out = substitute_linear(p, 1, 1, -1, 1)  # y -> y - x
        expected = tuple(F((-1) ** (n - i) * binomial(n, i)) for i in range(n + 1))
        assert out.coeffs == expected

    def test_composition_is_matrix_product(self):
        # substituting M1 then M2 equals one substitution by the product
        # matrix (M1 @ M2 under the row convention used here)
        rng = random.Random(42)
        for _ in range(30):
            n = rng.randint(1, 6)
            p = random_poly(rng, n)
            a1, b1, c1, d1 = (F(rng.randint(-3, 3)) for _ in range(4))
            a2, b2, c2, d2 = (F(rng.randint(-3, 3)) for _ in range(4))
            step = substitute_linear(substitute_linear(p, a1, b1, c1, d1), a2, b2, c2, d2)
            combined = substitute_linear(
                p,
                a1 * a2 + b1 * c2,
                a1 * b2 + b1 * d2,
                c1 * a2 + d1 * c2,
                c1 * b2 + d1 * d2,
            )
            assert step.coeffs == combined.coeffs


def test_fraction_pair_round_trip():
    values = [F(0), F(-84), F(1221, 2), F(10) ** 50 + 1]
    for v in values:
        pair = fraction_to_pair(v)
        assert all(isinstance(s, str) for s in pair)
        assert fraction_from_pair(pair) == v
