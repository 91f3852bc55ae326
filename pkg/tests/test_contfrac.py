import random
from fractions import Fraction
from math import comb

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from ncmotzkin.contfrac import (
    JFraction,
    QDBreakdown,
    SFraction,
    contract_s_to_j,
    first_ladder_failure,
    j_expand,
    qd_extract,
    r_ladder,
    r_ladder_check,
    s_expand,
)
from ncmotzkin.exactnum import D_WEIGHTS, DyckWeights, WeightSeq, weight_b, weight_d, weight_lambda
from ncmotzkin.paths import weighted_sum
from ncmotzkin.series import TruncatedSeries, gf_nc2

CATALAN = [comb(2 * n, n) // (n + 1) for n in range(20)]
THEOREM_COEFFS = [
    Fraction(v)
    for v in "1 1 1 2 1/2 5/2 2/5 13/5 5/13 34/13 13/34 89/34 34/89 233/89 89/233 610/233 233/610 1597/610".split()
]


def one(_):
    return Fraction(1)


def zero(_):
    return Fraction(0)


def table(values):
    return lambda i: values[i] if i < len(values) else Fraction(0)


class TestSExpand:
    def test_catalan(self):
        assert list(s_expand(SFraction(one), 5)) == CATALAN[:6]

    def test_d_sequence(self):
        assert list(s_expand(SFraction(weight_d), 5)) == [1, 1, 2, 5, 15, 51]

    def test_zeros(self):
        assert s_expand(SFraction(zero), 6) == TruncatedSeries.constant(1, 6)

    @pytest.mark.parametrize("order", [0, 1, 5, 12])
    def test_depth_cutoff(self, order):
        f = SFraction(lambda i: Fraction(i + 2, 3))
        assert s_expand(f, order, depth=order + 1) == s_expand(f, order, depth=order + 2)
        assert s_expand(f, order, depth=order + 1) == s_expand(f, order, depth=order + 7)

    def test_coefficients_are_dyck_sums(self):
        w = DyckWeights(WeightSeq.eventually_constant(["1/2", "3", "-2/7", "5"]))
        s = s_expand(SFraction(w.c), 10)
        for n in range(11):
            assert s[n] == weighted_sum("dyck", n, w)
        s = s_expand(SFraction(weight_d), 10)
        assert list(s) == [weighted_sum("dyck", n, D_WEIGHTS) for n in range(11)]


class TestJExpand:
    def test_b_lambda(self):
        assert list(j_expand(JFraction(weight_b, weight_lambda), 5)) == [1, 1, 2, 5, 15, 51]

    def test_zeros(self):
        assert j_expand(JFraction(zero, zero), 6) == TruncatedSeries.constant(1, 6)

    def test_motzkin_numbers(self):
        assert list(j_expand(JFraction(one, one), 6)) == [1, 1, 2, 4, 9, 21, 51]

    def test_depth_cutoff(self):
        f = JFraction(lambda i: Fraction(i, 2), lambda i: Fraction(1, i + 1))
        assert j_expand(f, 9, depth=10) == j_expand(f, 9, depth=11)


class TestContraction:
    def test_d_gives_b_lambda(self):
        j = contract_s_to_j(SFraction(weight_d))
        for n in range(40):
            assert j.a(n) == weight_b(n)
            assert j.beta(n) == weight_lambda(n)

    def test_ones(self):
        j = contract_s_to_j(SFraction(one))
        assert [j.a(n) for n in range(5)] == [1, 2, 2, 2, 2]
        assert [j.beta(n) for n in range(5)] == [1] * 5

    def test_zeros(self):
        j = contract_s_to_j(SFraction(zero))
        assert all(j.a(n) == 0 and j.beta(n) == 0 for n in range(5))

    @pytest.mark.parametrize("seed", range(20))
    def test_s_equals_contracted_j(self, seed):
        rng = random.Random(seed)
        c = [Fraction(rng.randint(-20, 20), rng.randint(1, 20)) for _ in range(40)]
        f = SFraction(table(c))
        assert s_expand(f, 16) == j_expand(contract_s_to_j(f), 16)


class TestQD:
    def test_theorem_coefficients(self):
        assert qd_extract(gf_nc2(25), 18) == THEOREM_COEFFS
        assert THEOREM_COEFFS == [weight_d(m) for m in range(18)]

    def test_catalan(self):
        assert qd_extract(TruncatedSeries.from_coeffs(CATALAN[:8]), 5) == [1] * 5

    def test_constant_series(self):
        assert qd_extract(TruncatedSeries.constant(1, 9), 6) == [0] * 6

    def test_breakdown(self):
        # 1 + x^2: no S-fraction (c_0 = 0 but the remainder is nonzero)
        with pytest.raises(QDBreakdown) as info:
            qd_extract(TruncatedSeries.from_coeffs([1, 0, 1, 0, 0]), 3)
        assert info.value.depth == 0

    def test_too_many(self):
        with pytest.raises(ValueError):
            qd_extract(gf_nc2(5), 6)

    @settings(max_examples=50)
    @given(st.lists(st.fractions(min_value=Fraction(1, 30), max_value=50, max_denominator=30), min_size=1, max_size=12))
    def test_roundtrip(self, cs):
        s = s_expand(SFraction(table(cs)), len(cs))
        assert qd_extract(s, len(cs)) == cs


class TestLadder:
    def test_checks(self):
        assert r_ladder_check(6, 20)
        assert r_ladder_check(1, 1)
        assert first_ladder_failure(8, 30) is None

    def test_constant_terms(self):
        R = r_ladder(6, 10)
        assert R[-1] == gf_nc2(10)
        for m in range(0, 7):
            assert R[m][0] == weight_d(m)

    def test_rejects_degenerate(self):
        with pytest.raises(ValueError):
            r_ladder_check(0, 5)
