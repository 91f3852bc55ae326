from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from ncmotzkin.exactnum import (
    ALPHA_BETA,
    WeightSeq,
    catalan_fib_identity,
    fib,
    format_rational,
    to_rational,
    weight_alpha,
    weight_b,
    weight_beta,
    weight_d,
    weight_lambda,
)


def fib_by_iteration(m):
    # plain recurrence from F_{-1} = 1, F_0 = 0
    a, b = 1, 0
    for _ in range(m + 1):
        a, b = b, a + b
    return a


@pytest.mark.parametrize("m, expected", [(-1, 1), (0, 0), (1, 1), (2, 1), (10, 55)])
def test_fib_values(m, expected):
    assert fib(m) == expected


def test_fib_matches_iteration():
    assert [fib(m) for m in range(-1, 200)] == [fib_by_iteration(m) for m in range(-1, 200)]


@pytest.mark.parametrize("m", [-2, -5])
def test_fib_rejects_below_minus_one(m):
    with pytest.raises(ValueError):
        fib(m)


def test_fib_recurrence():
    for m in range(1, 300):
        assert fib(m) == fib(m - 1) + fib(m - 2)


@pytest.mark.parametrize(
    "fn, n, expected",
    [
        (weight_b, 0, Fraction(1)),
        (weight_b, 1, Fraction(2)),
        (weight_b, 2, Fraction(5, 2)),
        (weight_lambda, 0, Fraction(1)),
        (weight_lambda, 1, Fraction(2)),
        (weight_lambda, 2, Fraction(5, 4)),
    ],
)
def test_motzkin_weights(fn, n, expected):
    assert fn(n) == expected


def test_d_sequence_prefix():
    expected = ["1", "1", "1", "2", "1/2", "5/2", "2/5", "13/5", "5/13", "34/13"]
    assert [format_rational(weight_d(m)) for m in range(10)] == expected
    assert weight_d(17) == Fraction(1597, 610)


@pytest.mark.parametrize("fn", [weight_b, weight_lambda, weight_d, weight_alpha, weight_beta])
def test_negative_index_rejected(fn):
    with pytest.raises(ValueError):
        fn(-1)


class TestLemmaIdentities:
    def test_b_is_sum_of_adjacent_d(self):
        for n in range(1, 51):
            assert weight_b(n) == weight_d(2 * n - 1) + weight_d(2 * n)

    def test_lambda_is_product_of_adjacent_d(self):
        for n in range(0, 51):
            assert weight_lambda(n) == weight_d(2 * n) * weight_d(2 * n + 1)

    def test_reciprocal_sum_is_three(self):
        for n in range(1, 51):
            assert 1 / weight_d(2 * n - 1) + weight_d(2 * n + 1) == 3

    def test_alpha_beta_constant_tails(self):
        assert [weight_alpha(n) for n in range(30)] == [2] + [3] * 29
        assert all(weight_beta(n) == 1 for n in range(30))
        assert [ALPHA_BETA.horizontal(n) for n in range(30)] == [weight_alpha(n) for n in range(30)]


class TestCatalanIdentity:
    @pytest.mark.parametrize("m, i", [(5, 2), (3, 0), (2, 3)])
    def test_examples(self, m, i):
        assert catalan_fib_identity(m, i)

    def test_m_minus_i_equal_minus_one(self):
        # F_2^2 - F_5 F_{-1} = 1 - 5 = -4 = (-1)^{-1} F_3^2
        assert fib(2) ** 2 - fib(5) * fib(-1) == -(fib(3) ** 2)
        for i in range(0, 40):
            assert catalan_fib_identity(i - 1, i)

    def test_range(self):
        for m in range(0, 41):
            for i in range(0, m + 1):
                assert catalan_fib_identity(m, i)

    @pytest.mark.parametrize("m, i", [(0, 2), (3, -1)])
    def test_out_of_range(self, m, i):
        with pytest.raises(ValueError):
            catalan_fib_identity(m, i)


rationals = st.fractions(max_denominator=10**6).filter(lambda q: abs(q.numerator) < 10**12)


@given(rationals, rationals)
def test_rational_arithmetic_is_exact(a, b):
    assert (a + b) - b == a
    if b != 0:
        assert (a * b) / b == a


@given(rationals)
def test_rationals_normalized(q):
    assert q.denominator > 0
    assert to_rational(format_rational(q)) == q


def test_weightseq_parse_eventually_constant():
    w = WeightSeq.parse("1,2,3,3...")
    assert w.take(6) == [1, 2, 3, 3, 3, 3]
    assert WeightSeq.parse("1/2").take(3) == [Fraction(1, 2)] * 3
    with pytest.raises(ValueError):
        WeightSeq.parse("...")
