from fractions import Fraction as F

import pytest

from polystirling.associated import s2_assoc
from polystirling.families import FAMILY_IDS, default_instances, family, oracle_check
from polystirling.polynomials import Polynomial, falling_factorial
from polystirling.triangles import stirling1_degenerate
from polystirling.umbral import sheffer_polynomials

LAMBDAS = (F(1, 2), F(-1, 3), F(2))


def test_registry_covers_all_ids():
    assert len(FAMILY_IDS) == 21
    assert "bernoulli_product" in FAMILY_IDS


def test_unknown_id_and_param_validation():
    with pytest.raises(ValueError, match="unknown family"):
        family("nope")
    with pytest.raises(ValueError, match="requires parameter"):
        family("falling_deg")
    with pytest.raises(ValueError, match="does not take"):
        family("monomial", lam=F(1, 2))
    with pytest.raises(ValueError, match="r != 0"):
        family("gould_hopper", r=0, s=1)
    with pytest.raises(ValueError, match="a != 0"):
        family("poisson_charlier", a=0)


def test_instances_are_cached_and_hashable():
    a = family("falling_deg", lam=F(1, 2))
    b = family("falling_deg", lam=F(1, 2))
    assert a is b
    assert a == b and hash(a) == hash(b)
    assert a != family("falling_deg", lam=F(2))
    assert a.label == "falling_deg(lam=1/2)"
    assert a.param("lam") == F(1, 2)


def test_generator_spot_values():
    assert family("monomial").poly(3) == Polynomial([0, 0, 0, 1])
    assert family("bernoulli").poly(1) == Polynomial([F(-1, 2), 1])
    assert family("bernoulli_product").poly(2) == Polynomial([F(7, 12), -3, 3])
    assert family("gould_hopper", r=2, s=3).poly(1) == Polynomial([3, 2])
    assert family("falling_deg", lam=F(1, 2)).poly(2) == Polynomial([0, F(-1, 2), 1])


def test_degree_and_unit_head():
    for fam in default_instances():
        assert fam.poly(0) == Polynomial([1])
        for n in range(9):
            assert fam.poly(n).degree == n


def test_sheffer_generator_reproduces_members():
    for fam in default_instances():
        if fam.sheffer is None:
            continue
        polys = sheffer_polynomials(fam.sheffer, 10)
        for n in range(11):
            assert polys[n] == fam.poly(n)


def test_every_closed_form_matches_generic():
    for fam in default_instances():
        report = oracle_check(fam, 8)
        assert report.passed, report.to_dict()


def test_extra_parameter_samples():
    for fam in (family("gould_hopper", r=1, s=-1), family("poisson_charlier", a=F(-1, 2))):
        assert oracle_check(fam, 7).passed


def test_lambda_zero_where_defined():
    # families whose construction degenerates smoothly at step 0
    for fam_id in ("falling_deg", "rising_deg", "central_deg", "bell_partial_deg",
                   "bell_full_deg", "lah_bell_deg", "central_bell_deg"):
        fam = family(fam_id, lam=0)
        assert oracle_check(fam, 6).passed, fam_id


def test_rising_deg_first_kind_is_degenerate_stirling():
    # the first-kind numbers of the rising family equal the degenerate
    # Stirling numbers at the negated step
    for lam in LAMBDAS:
        fam = family("rising_deg", lam=lam)
        from polystirling.associated import s1_assoc

        for n in range(8):
            for k in range(n + 1):
                assert s1_assoc(fam, n, k) == stirling1_degenerate(n, k, -lam)


def test_product_family_reconstruction_identity():
    # expanding the convolution family in falling factorials and summing back
    fam = family("bernoulli_product")
    for n in range(9):
        rebuilt = sum(
            (s2_assoc(fam, n, k) * falling_factorial(k) for k in range(n + 1)),
            Polynomial(),
        )
        assert rebuilt == fam.poly(n)


def test_product_family_is_not_sheffer():
    assert family("bernoulli_product").sheffer is None


def test_vanishes_at_zero_flags():
    assert family("central").vanishes_at_zero(8)
    assert family("mittag_leffler").vanishes_at_zero(8)
    assert not family("bernoulli").vanishes_at_zero(8)
    assert not family("gould_hopper", r=2, s=3).vanishes_at_zero(8)
