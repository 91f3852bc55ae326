"""Exit criteria. Every check is exact rational equality (tolerance zero)."""

import random
from collections import defaultdict
from fractions import Fraction
from math import comb

import pytest

from ncmotzkin.bijections import (
    Label,
    contract_dyck,
    enumerate_choice_paths,
    enumerate_labeled,
    expand_motzkin,
    from_schroder,
    labeled_weight,
    odd_h_to_peaks,
    peaks_to_odd_h,
    to_schroder,
)
from ncmotzkin.contfrac import JFraction, SFraction, contract_s_to_j, j_expand, qd_extract, r_ladder, r_ladder_check, s_expand
from ncmotzkin.exactnum import (
    ALPHA_BETA,
    D_WEIGHTS,
    FIB2,
    NC3,
    catalan_fib_identity,
    weight_b,
    weight_d,
    weight_lambda,
)
from ncmotzkin.partitions import count_nc_filter
from ncmotzkin.paths import Flavor, count_no_even_peaks, count_sch_even, enumerate_paths, has_even_peak, is_sch_even, path_weight, weighted_sum
from ncmotzkin.series import gf_nc2

criterion = pytest.mark.criterion

THEOREM_COEFFS = [
    Fraction(v)
    for v in "1 1 1 2 1/2 5/2 2/5 13/5 5/13 34/13 13/34 89/34 34/89 233/89 89/233 610/233 233/610 1597/610".split()
]


def motzkin_numbers(count):
    m = [1, 1]
    for n in range(2, count):
        m.append(m[n - 1] + sum(m[k] * m[n - 2 - k] for k in range(n - 1)))
    return m[:count]


@pytest.fixture(scope="module")
def nc2_brute():
    """#NC_2(n), n = 0..12, by testing every set partition (Bell(12) = 4213597 at the top)."""
    return [count_nc_filter(2, n) for n in range(13)]


@criterion("AC1", "#NC_2(n) = Mot_n(b, lambda), 0 <= n <= 12, brute force")
def test_ac1_main_theorem(nc2_brute):
    mot = [weighted_sum(Flavor.MOTZKIN, n, FIB2) for n in range(13)]
    assert nc2_brute == mot


@criterion("AC2", "closed-form generating function coefficients 0..12 = #NC_2(n)")
def test_ac2_generating_function(nc2_brute):
    g = gf_nc2(12)
    assert list(g) == nc2_brute
    assert nc2_brute[:6] == [1, 1, 2, 5, 15, 51]


@criterion("AC3", "qd recovery of the 18 printed S-coefficients; S(x; d) = gf to order 30")
def test_ac3_sfraction():
    assert qd_extract(gf_nc2(25), 18) == THEOREM_COEFFS
    assert s_expand(SFraction(weight_d), 30) == gf_nc2(30)


@criterion("AC4", "three d-sequence identities for n <= 50; Fibonacci Catalan identity 0 <= i <= m <= 40")
def test_ac4_lemma():
    for n in range(0, 51):
        left = Fraction(0) if n == 0 else weight_d(2 * n - 1)
        assert weight_b(n) == left + weight_d(2 * n)
        assert weight_lambda(n) == weight_d(2 * n) * weight_d(2 * n + 1)
        if n >= 1:
            assert 1 / weight_d(2 * n - 1) + weight_d(2 * n + 1) == 3
    assert all(catalan_fib_identity(m, i) for m in range(41) for i in range(m + 1))


@criterion("AC5", "S = J(contract) for 100 random sequences at order 16; fiber weight transport, Dyck length <= 12")
def test_ac5_contraction():
    rng = random.Random(20240501)
    for _ in range(100):
        c = [Fraction(rng.randint(-30, 30), rng.randint(1, 30)) for _ in range(40)]
        f = SFraction(lambda i, c=c: c[i])
        assert s_expand(f, 16) == j_expand(contract_s_to_j(f), 16)
    for n in range(0, 7):
        fibers = defaultdict(Fraction)
        for p in enumerate_paths(Flavor.DYCK, n):
            m = contract_dyck(p)
            assert labeled_weight(m, D_WEIGHTS) == path_weight(p, D_WEIGHTS)
            fibers[m.path] += path_weight(p, D_WEIGHTS)
        for mp in enumerate_paths(Flavor.MOTZKIN, n):
            assert fibers[mp] == path_weight(mp, FIB2)


@criterion("AC6", "R-ladder holds for m <= 8 to order 30; constant term of R_m is d_m")
def test_ac6_ladder():
    assert r_ladder_check(8, 30)
    R = r_ladder(8, 30)
    assert all(R[m][0] == weight_d(m) for m in range(0, 9))


@criterion("AC7", "#NC_2(n) = #SCH_even(n-1) = Mot_(n-1)(alpha,beta) = Dyck_n(d) = Mot_n(b,lambda), 1 <= n <= 10")
def test_ac7_chain(nc2_brute):
    s_series = s_expand(SFraction(weight_d), 10)
    j_series = j_expand(JFraction(weight_b, weight_lambda), 10)
    for n in range(1, 11):
        legs = [
            nc2_brute[n],  # partition enumeration
            count_sch_even(n - 1),  # path enumeration
            weighted_sum(Flavor.MOTZKIN, n - 1, ALPHA_BETA),  # transfer DP
            s_series[n],  # continued fraction
            weighted_sum(Flavor.DYCK, n, D_WEIGHTS),  # transfer DP
            j_series[n],  # continued fraction
            weighted_sum(Flavor.MOTZKIN, n, FIB2),  # transfer DP
        ]
        assert len(set(legs)) == 1, (n, legs)


@criterion("AC8", "round trips: contract/expand (Dyck <= 16), Schröder (n <= 8), peaks (length <= 12); peak counts n <= 8")
def test_ac8_bijections():
    for n in range(0, 9):
        dycks = list(enumerate_paths(Flavor.DYCK, n))
        assert all(expand_motzkin(contract_dyck(p)) == p for p in dycks)
        labeled = list(enumerate_labeled(n))
        assert all(contract_dyck(expand_motzkin(m)) == m for m in labeled)
        assert len(labeled) == len(dycks)

        decorated = list(enumerate_choice_paths(n))
        targets = set(enumerate_paths(Flavor.SCHRODER, n, even_hh_only=True))
        images = [to_schroder(c) for c in decorated]
        assert len(set(images)) == len(images) and set(images) == targets
        assert all(from_schroder(s) == c for c, s in zip(decorated, images))
        assert all(to_schroder(from_schroder(s)) == s for s in targets)

        assert count_no_even_peaks(n) == count_sch_even(n)
    for n in range(0, 7):
        sources = [s for s in enumerate_paths(Flavor.SCHRODER, n) if not has_even_peak(s)]
        evens = [s for s in enumerate_paths(Flavor.SCHRODER, n) if is_sch_even(s)]
        assert {odd_h_to_peaks(s) for s in sources} == set(evens)
        assert all(peaks_to_odd_h(odd_h_to_peaks(s)) == s for s in sources)
        assert all(odd_h_to_peaks(peaks_to_odd_h(t)) == t for t in evens)


@criterion("AC9", "#NC_0 = Motzkin, #NC_1 = Catalan, #NC_3 = Mot_n((1,2,3,3,...),(1,2,2,...)), n <= 11")
def test_ac9_other_distances():
    motz = motzkin_numbers(12)
    for n in range(0, 12):
        assert count_nc_filter(0, n) == motz[n]
        assert count_nc_filter(1, n) == comb(2 * n, n) // (n + 1)
        assert count_nc_filter(3, n) == weighted_sum(Flavor.MOTZKIN, n, NC3)


@criterion("AC10", "J(x; b, lambda) to order 30 has integer coefficients from non-integer weights")
def test_ac10_integrality():
    assert all(weight_b(n).denominator > 1 and weight_lambda(n).denominator > 1 for n in range(2, 31))
    series = j_expand(JFraction(weight_b, weight_lambda), 30)
    assert series.is_integral()
    assert series == gf_nc2(30)
