import random
from fractions import Fraction as F

import pytest

from polystirling.associated import (
    associated_exp,
    associated_log,
    bar_s1_recurrence_cases,
    bar_s2_recurrence_cases,
    bar_transform,
    falling_alternating_sum_cases,
    monomial_coefficients_from_s2,
    rising_reflection_cases,
    s1_assoc,
    s1_assoc_functional,
    s1_assoc_gf,
    s2_assoc,
    s2_assoc_finite_difference,
    s2_assoc_gf,
    verify_orthogonality,
)
from polystirling.families import UnsupportedFamilyError, family
from polystirling.series import (
    FormalPowerSeries,
    degenerate_exp,
    degenerate_log1p,
    expm1_series,
    identity,
    log1p_series,
    scaled_expm1,
)
from polystirling.triangles import lah, stirling1, stirling2

SAMPLE_FAMILIES = [
    family("monomial"),
    family("falling_deg", lam=F(1, 2)),
    family("rising"),
    family("central"),
    family("bell"),
    family("mittag_leffler"),
    family("bernoulli"),
    family("euler"),
    family("gould_hopper", r=2, s=3),
    family("bernoulli2nd"),
    family("poisson_charlier", a=1),
    family("bernoulli_product"),
]


def test_monomial_family_reduces_to_classical():
    mono = family("monomial")
    for n in range(9):
        for k in range(n + 1):
            assert s2_assoc(mono, n, k) == stirling2(n, k)
            assert s1_assoc(mono, n, k) == stirling1(n, k)


def test_spot_values():
    assert s2_assoc(family("rising"), 3, 2) == lah(3, 2) == 6
    assert s2_assoc(family("mittag_leffler"), 1, 1) == 2
    assert s1_assoc(family("rising"), 3, 2) == -lah(3, 2)
    assert s1_assoc(family("bernoulli"), 1, 0) == F(1, 2)


def test_index_validation():
    with pytest.raises(ValueError):
        s2_assoc(family("monomial"), 2, 3)
    with pytest.raises(ValueError):
        s1_assoc(family("monomial"), 2, -1)


def test_two_second_kind_routes_agree():
    for fam in SAMPLE_FAMILIES:
        for n in range(11):
            for k in range(n + 1):
                assert s2_assoc(fam, n, k) == s2_assoc_finite_difference(fam, n, k)


def test_first_kind_functional_route_agrees():
    for fam in SAMPLE_FAMILIES:
        if fam.sheffer is None:
            continue
        for n in range(11):
            for k in range(n + 1):
                assert s1_assoc(fam, n, k) == s1_assoc_functional(fam, n, k)


def test_first_kind_functional_needs_pair():
    with pytest.raises(UnsupportedFamilyError, match="no Sheffer pair"):
        s1_assoc_functional(family("bernoulli_product"), 2, 1)


def test_generating_functions_match_triangles():
    for fam in SAMPLE_FAMILIES:
        if fam.sheffer is None:
            continue
        for k in range(5):
            series = s2_assoc_gf(fam, k, 8)
            for n in range(k, 9):
                assert series.egf_coefficient(n) == s2_assoc(fam, n, k)
        if fam.sheffer.is_associated:
            for k in range(5):
                series = s1_assoc_gf(fam, k, 8)
                for n in range(k, 9):
                    assert series.egf_coefficient(n) == s1_assoc(fam, n, k)


def test_first_kind_gf_gated_on_unit_g():
    with pytest.raises(UnsupportedFamilyError, match="g = 1"):
        s1_assoc_gf(family("bernoulli"), 1, 6)
    with pytest.raises(UnsupportedFamilyError, match="no Sheffer pair"):
        s2_assoc_gf(family("bernoulli_product"), 1, 6)


def test_classical_first_kind_gf():
    series = s1_assoc_gf(family("monomial"), 2, 7)
    expected = log1p_series(7) ** 2 / 2
    assert series == expected


def test_associated_log_exp_classical():
    n = 9
    t = identity(n)
    assert associated_log(t, n) == log1p_series(n)
    assert associated_exp(t, n) == expm1_series(n)


def test_associated_log_exp_degenerate():
    lam = F(1, 2)
    f = scaled_expm1(lam, 9)
    assert associated_log(f, 9) == degenerate_log1p(lam, 9)
    assert associated_exp(f, 9) == degenerate_exp(lam, 9) - 1


def test_associated_log_exp_are_mutually_inverse():
    rng = random.Random("assoc-log-exp")
    for _ in range(10):
        coeffs = [0, F(rng.randint(1, 5), rng.randint(1, 3))]
        coeffs += [F(rng.randint(-4, 4), rng.randint(1, 3)) for _ in range(9)]
        f = FormalPowerSeries(coeffs)
        lseries = associated_log(f, 10)
        eseries = associated_exp(f, 10)
        assert lseries.compose(eseries) == identity(10)
        assert eseries.compose(lseries) == identity(10)
    with pytest.raises(ValueError):
        associated_log(identity(5) ** 2, 5)


def test_bar_transform_of_monomials_is_identity():
    mono = family("monomial")
    bar = bar_transform(mono)
    for n in range(8):
        assert bar.poly(n) == mono.poly(n)
    # classical triangle recurrence drops out
    for _, expected, got in bar_s2_recurrence_cases(mono, 7):
        assert expected == got


def test_bar_recurrences_hold():
    for fam in (family("bernoulli"), family("rising"), family("poisson_charlier", a=1)):
        for _, expected, got in bar_s2_recurrence_cases(fam, 8):
            assert expected == got
        for _, expected, got in bar_s1_recurrence_cases(fam, 8):
            assert expected == got


def test_bar_boundary_column_vanishes():
    fam = family("bernoulli")
    bar = bar_transform(fam)
    for n in range(1, 8):
        assert s2_assoc(bar, n, 0) == 0


def test_monomial_coefficient_reconstruction():
    mono = family("monomial")
    for n in range(7):
        assert monomial_coefficients_from_s2(mono, n) == [
            F(int(l == n)) for l in range(n + 1)
        ]
    rising = family("rising")
    assert monomial_coefficients_from_s2(rising, 3) == [0, 2, 3, 1]
    euler = family("euler")
    for n in range(9):
        expected = [euler.poly(n).coefficient(l) for l in range(n + 1)]
        assert monomial_coefficients_from_s2(euler, n) == expected


def test_diagonal_invariants():
    for fam in SAMPLE_FAMILIES:
        for n in range(8):
            leading = fam.poly(n).leading
            assert s2_assoc(fam, n, n) == leading
            assert s1_assoc(fam, n, n) * leading == 1


def test_alternating_factorial_sum():
    for fam in SAMPLE_FAMILIES:
        for _, expected, got in falling_alternating_sum_cases(fam, 10):
            assert expected == got


def test_rising_reflection():
    for fam in (family("monomial"), family("bernoulli"), family("bernoulli_product")):
        for _, expected, got in rising_reflection_cases(fam, 8):
            assert expected == got


def test_orthogonality_reports():
    assert verify_orthogonality(family("monomial"), 12).passed
    assert verify_orthogonality(family("bernoulli"), 10).passed
    assert verify_orthogonality(family("bernoulli_product"), 8).passed


def test_inverse_relations_explicit():
    fam = family("bell")
    rng = random.Random(7)
    n_max = 7
    c = [F(rng.randint(-9, 9), rng.randint(1, 9)) for _ in range(n_max + 1)]
    a = [sum(s2_assoc(fam, n, k) * c[k] for k in range(n + 1)) for n in range(n_max + 1)]
    back = [sum(s1_assoc(fam, n, k) * a[k] for k in range(n + 1)) for n in range(n_max + 1)]
    assert back == c
