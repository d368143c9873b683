import math

import pytest

from uniform_bounds.closed_form import (
    Method,
    conjecture2_gap,
    corollary_l_check,
    defect1_check,
    defect2_check,
    defect_fires,
    min_n_scan,
    scott_check,
    singleton_check,
    two_support_check,
)
from uniform_bounds.lp import verify_dual_certificate


class TestSingleton:
    def test_examples(self):
        assert singleton_check(4, 3).nonexistent
        assert not singleton_check(4, 2).nonexistent
        assert not singleton_check(5, 2).nonexistent


class TestScott:
    def test_examples(self):
        assert scott_check(8, 2).nonexistent           # 8 > 6
        assert not scott_check(6, 2).nonexistent       # boundary is not strict
        assert scott_check(18, 3).nonexistent          # 18 > 16

    def test_odd_threshold(self):
        assert not scott_check(11, 2).nonexistent      # 11 = 2q(q+1)-1 boundary
        assert scott_check(13, 2).nonexistent


class TestDefectThresholds:
    def test_defect1_q2_boundary(self):
        assert not defect1_check(16, 2).nonexistent    # 16 == 4q^2 is inconclusive
        assert defect1_check(18, 2).nonexistent

    def test_defect1_q4(self):
        assert not defect1_check(64, 4).nonexistent
        assert defect1_check(66, 4).nonexistent
        assert not defect1_check(81, 4).nonexistent
        assert defect1_check(83, 4).nonexistent

    def test_defect2_q5(self):
        assert not defect2_check(152, 5).nonexistent
        assert defect2_check(154, 5).nonexistent
        assert not defect2_check(183, 5).nonexistent
        assert defect2_check(185, 5).nonexistent


def factorial_ratio_oracle(n, q, l):
    """Recompute the factorial-ratio comparison from scratch."""
    if n % 2 == 0:
        m = n // 2
        lhs = math.factorial(m + l) // math.factorial(m + 1)
        rhs = (q ** (2 * l) - 1) // (q * q - 1) * (math.factorial(2 * l - 1) // math.factorial(l))
    else:
        m = (n - 1) // 2
        lhs = math.factorial(m + l + 1) // math.factorial(m + 1)
        rhs = (q ** (2 * l + 1) - 1) // (q - 1) * (math.factorial(2 * l) // math.factorial(l))
    return lhs, rhs


class TestCorollaryL:
    def test_q4_l3_even_threshold(self):
        # (m+2)(m+3) > 273*20 = 5460 first holds at m = 72, i.e. n = 144
        lhs, rhs = factorial_ratio_oracle(144, 4, 3)
        assert rhs == 5460 and lhs == 74 * 75
        assert corollary_l_check(144, 4, 3).nonexistent
        assert not corollary_l_check(142, 4, 3).nonexistent

    def test_q4_l3_odd_threshold(self):
        assert corollary_l_check(169, 4, 3).nonexistent
        assert not corollary_l_check(167, 4, 3).nonexistent

    def test_q7_l4_even_threshold(self):
        assert corollary_l_check(582, 7, 4).nonexistent
        assert not corollary_l_check(580, 7, 4).nonexistent

    def test_matches_oracle_on_grid(self):
        for q in (2, 3, 4, 5):
            for l in (1, 2, 3, 4):
                for n in range(2 * l + 2, 400, 7):
                    verdict = corollary_l_check(n, q, l)
                    if n % 2 == 0 and l < 2:
                        assert not verdict.nonexistent and "not applicable" in verdict.reason
                        continue
                    lhs, rhs = factorial_ratio_oracle(n, q, l)
                    assert verdict.nonexistent == (lhs > rhs)

    def test_even_l1_excluded(self):
        verdict = corollary_l_check(100, 3, 1)
        assert not verdict.nonexistent
        assert "not applicable" in verdict.reason


class TestTwoSupport:
    def test_224_109_5_nonexistent_with_certificate(self):
        verdict = two_support_check(224, 109, 5)
        assert verdict.nonexistent
        assert verdict.certificate is not None
        assert verify_dual_certificate(verdict.certificate).ok

    def test_224_108_5_inconclusive(self):
        verdict = two_support_check(224, 108, 5)
        assert not verdict.nonexistent
        assert verdict.trace  # comparison rationals recorded either way

    def test_ame_not_applicable(self):
        verdict = two_support_check(8, 4, 2)
        assert not verdict.nonexistent
        assert "not applicable" in verdict.reason

    def test_defect2_fires_at_187_while_bound_is_90(self):
        # at n = 187 the odd defect-2 threshold (183) has fired, removing
        # k = 91; the resulting bound k <= 90 comes from that method
        assert defect2_check(187, 5).nonexistent
        assert 187 // 2 - 3 == 90


EXPECTED_DEFECT12 = {
    4: {(1, "even"): 66, (1, "odd"): 83, (2, "even"): 100, (2, "odd"): 125},
    5: {(1, "even"): 102, (1, "odd"): 123, (2, "even"): 154, (2, "odd"): 185},
    6: {(1, "even"): 146, (1, "odd"): 171, (2, "even"): 220, (2, "odd"): 257},
    7: {(1, "even"): 198, (1, "odd"): 227, (2, "even"): 298, (2, "odd"): 341},
}


class TestMinNScan:
    def test_q6_l1(self):
        assert min_n_scan(6, 1, "even") == 146
        assert min_n_scan(6, 1, "odd") == 171

    def test_q5_l3(self):
        assert min_n_scan(5, 3, "even") == 224
        assert min_n_scan(5, 3, "odd") == 261

    def test_q4_ame(self):
        # thresholds 2(q^2-1) = 30 even and 2q(q+1)-1 = 39 odd
        assert min_n_scan(4, 0, "even") == 32
        assert min_n_scan(4, 0, "odd") == 41

    def test_defect12_grid(self):
        for q, cells in EXPECTED_DEFECT12.items():
            for (l, parity), expected in cells.items():
                assert min_n_scan(q, l, parity) == expected

    def test_monotone_once_fired(self):
        for q in (2, 3, 4, 5):
            for l in (0, 1, 2, 3):
                for parity in ("even", "odd"):
                    start = min_n_scan(q, l, parity)
                    assert start is not None
                    for n in range(start, start + 80, 2):
                        assert defect_fires(n, q, l)

    def test_disjunction_never_contradicts_either_route(self):
        # both routes are one-sided nonexistence claims; the engine's
        # verdict must fire no later than the earlier of the two
        for q in range(2, 13):
            for parity in ("even", "odd"):
                for l in (1, 2):
                    combined = min_n_scan(q, l, parity)
                    threshold_only = []
                    n = 2 * l if parity == "even" else 2 * l + 1
                    check = defect1_check if l == 1 else defect2_check
                    while n < 20000:
                        if check(n, q).nonexistent:
                            threshold_only.append(n)
                            break
                        n += 2
                    assert combined is not None and threshold_only
                    assert combined <= threshold_only[0]

    def test_bad_parity_rejected(self):
        with pytest.raises(ValueError):
            min_n_scan(4, 1, "both")


def test_conjecture2_gap_reports_reference():
    gap = conjecture2_gap(4, 3)
    assert gap.reference == 8 * 16
    assert gap.min_n_even == 144
    assert gap.gap_even == 144 - 128
    assert gap.min_n_odd == 169


def test_methods_are_tagged():
    assert scott_check(8, 2).method is Method.SCOTT
    assert defect1_check(66, 4).method is Method.DEFECT1
    assert corollary_l_check(144, 4, 3).method is Method.COROLLARY_L
    assert two_support_check(224, 109, 5).method is Method.TWO_SUPPORT
