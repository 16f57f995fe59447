import math
from fractions import Fraction as F

import pytest

from polystirling.polynomials import falling_factorial
from polystirling.series import degenerate_exp, exp_scaled, fps, identity
from polystirling.triangles import (
    bell_value,
    bernoulli_number,
    bernoulli2nd_number,
    central_factorial_numbers,
    euler_number,
    gould_hopper,
    gould_hopper_sum,
    lah,
    lah_degenerate,
    scalar_sequence,
    stirling1,
    stirling1_degenerate,
    stirling1_degenerate_gf,
    stirling2,
    stirling2_degenerate,
)

LAMBDAS = (F(1, 2), F(-1, 3), F(2))


def count_set_partitions(n, k):
    """Brute-force count of partitions of an n-set into k nonempty blocks."""
    if n == 0:
        return 1 if k == 0 else 0
    total = 0

    def rec(remaining, blocks):
        nonlocal total
        if not remaining:
            total += len(blocks) == k
            return
        first, rest = remaining[0], remaining[1:]
        for b in blocks:
            b.append(first)
            rec(rest, blocks)
            b.pop()
        if len(blocks) < k:
            blocks.append([first])
            rec(rest, blocks)
            blocks.pop()

    rec(list(range(n)), [])
    return total


def test_stirling2_boundaries_and_partition_oracle():
    for n in range(8):
        assert stirling2(n, n) == 1
        assert stirling2(n, 0) == (1 if n == 0 else 0)
    assert stirling2(4, 2) == 7
    for n in range(7):
        for k in range(n + 1):
            assert stirling2(n, k) == count_set_partitions(n, k)


def test_stirling1_from_falling_expansion():
    # (x)_3 = x^3 - 3x^2 + 2x
    assert stirling1(3, 1) == 2
    assert stirling1(3, 2) == -3
    for n in range(10):
        p = falling_factorial(n)
        assert [stirling1(n, k) for k in range(n + 1)] == [p.coefficient(k) for k in range(n + 1)]


def test_index_validation():
    with pytest.raises(ValueError):
        stirling2(3, 4)
    with pytest.raises(ValueError):
        stirling1(2, -1)


def test_classical_orthogonality():
    for n in range(13):
        for l in range(n + 1):
            assert sum(stirling1(n, k) * stirling2(k, l) for k in range(l, n + 1)) == (n == l)
            assert sum(stirling2(n, k) * stirling1(k, l) for k in range(l, n + 1)) == (n == l)


def test_degenerate_stirling_specializations():
    for n in range(9):
        for k in range(n + 1):
            assert stirling2_degenerate(n, k, 1) == (1 if n == k else 0)
            assert stirling1_degenerate(n, k, 1) == (1 if n == k else 0)
            assert stirling2_degenerate(n, k, 0) == stirling2(n, k)
            assert stirling1_degenerate(n, k, 0) == stirling1(n, k)


def test_degenerate_stirling_small_value():
    # (x)_{2,1/2} = x^2 - x/2 = (x)_2 + (1/2)(x)_1; the degenerate
    # exponential route (1+t/2)^2 - 1 = t + t^2/4 gives the same 1/2
    assert stirling2_degenerate(2, 1, F(1, 2)) == F(1, 2)
    e = degenerate_exp(F(1, 2), 4) - 1
    assert e.egf_coefficient(2) == F(1, 2)


def test_degenerate_stirling_gf_cross_check():
    for lam in LAMBDAS:
        for k in range(4):
            series = stirling1_degenerate_gf(k, lam, 8)
            for n in range(k, 9):
                assert series.egf_coefficient(n) == stirling1_degenerate(n, k, lam)
        e = degenerate_exp(lam, 8) - 1
        for k in range(4):
            series = e**k / math.factorial(k)
            for n in range(k, 9):
                assert series.egf_coefficient(n) == stirling2_degenerate(n, k, lam)


def test_degenerate_orthogonality():
    for lam in LAMBDAS:
        for n in range(9):
            for l in range(n + 1):
                total = sum(
                    stirling1_degenerate(n, k, lam) * stirling2_degenerate(k, l, lam)
                    for k in range(l, n + 1)
                )
                assert total == (n == l)


def test_lah_values():
    for n in range(8):
        assert lah(n, n) == 1
    assert lah(3, 2) == 6
    assert lah(1, 0) == 0


def test_lah_matches_degenerate_at_one():
    for n in range(8):
        for k in range(n + 1):
            assert lah_degenerate(n, k, 1) == lah(n, k)


def test_signed_lah_involution():
    for n in range(13):
        for l in range(n + 1):
            total = sum((-1) ** (n - k) * lah(n, k) * lah(k, l) for k in range(l, n + 1))
            assert total == (n == l)


def test_degenerate_lah_stirling_convolution():
    for lam in LAMBDAS:
        for n in range(8):
            for k in range(n + 1):
                expected = sum(
                    (-lam) ** (n - l) * stirling1(n, l) * stirling2(l, k)
                    for l in range(k, n + 1)
                )
                assert lah_degenerate(n, k, lam) == expected


def test_degenerate_lah_gf_cross_check():
    for lam in LAMBDAS:
        # ((1 - lam t)^(-1/lam) - 1)^k / k!
        base = fps([1, -lam], 8).rational_power(-1 / lam) - 1
        for k in range(4):
            series = base**k / math.factorial(k)
            for n in range(k, 9):
                assert series.egf_coefficient(n) == lah_degenerate(n, k, lam)


def test_central_factorial_values():
    for n in range(9):
        assert central_factorial_numbers(n, n, 1) == 1
        assert central_factorial_numbers(n, n, 2) == 1
    assert central_factorial_numbers(3, 1, 1) == F(-1, 4)


def test_central_second_kind_gf():
    f = exp_scaled(F(1, 2), 8) - exp_scaled(F(-1, 2), 8)
    for k in range(5):
        series = f**k / math.factorial(k)
        for n in range(k, 9):
            assert series.egf_coefficient(n) == central_factorial_numbers(n, k, 2)


def test_central_first_kind_gf_is_reversion():
    # the column EGF of the first kind is the compositional inverse of
    # e^{t/2} - e^{-t/2}, equivalently log(1 + (t/2)(t + sqrt(t^2+4)))
    f = exp_scaled(F(1, 2), 9) - exp_scaled(F(-1, 2), 9)
    fbar = f.revert()
    root = fps([1, 0, F(1, 4)], 9).rational_power(F(1, 2)) * 2
    arg = (identity(9) + root) / 2
    assert (arg * arg).log() == fbar
    for k in range(4):
        series = fbar**k / math.factorial(k)
        for n in range(k, 10):
            assert series.egf_coefficient(n) == central_factorial_numbers(n, k, 1)


def test_central_pairs_are_inverse_triangles():
    def check(kind1, kind2):
        for n in range(11):
            for l in range(n + 1):
                total = sum(kind1(n, k) * kind2(k, l) for k in range(l, n + 1))
                assert total == (n == l)

    check(lambda n, k: central_factorial_numbers(n, k, 1),
          lambda n, k: central_factorial_numbers(n, k, 2))
    for lam in LAMBDAS:
        check(lambda n, k: central_factorial_numbers(n, k, 1, lam),
              lambda n, k: central_factorial_numbers(n, k, 2, lam))
        check(lambda n, k: central_factorial_numbers(n, k, 1, lam, "r"),
              lambda n, k: central_factorial_numbers(n, k, 2, lam, "r"))


def test_central_degenerate_gf_cross_checks():
    for lam in LAMBDAS:
        half = 1 / (2 * lam)
        e_half = fps([1, lam], 8).rational_power(half)
        e_mhalf = fps([1, lam], 8).rational_power(-half)
        t2 = e_half - e_mhalf
        for k in range(4):
            series = t2**k / math.factorial(k)
            for n in range(k, 9):
                assert series.egf_coefficient(n) == central_factorial_numbers(n, k, 2, lam)
        r2 = (exp_scaled(lam / 2, 8) - exp_scaled(-lam / 2, 8)) / lam
        for k in range(4):
            series = r2**k / math.factorial(k)
            for n in range(k, 9):
                assert series.egf_coefficient(n) == central_factorial_numbers(n, k, 2, lam, "r")
        root = fps([1, 0, lam * lam / 4], 8).rational_power(F(1, 2)) * 2
        arg = (identity(8) * lam + root) / 2
        r1 = arg.log() * F(2) / lam
        for k in range(4):
            series = r1**k / math.factorial(k)
            for n in range(k, 9):
                assert series.egf_coefficient(n) == central_factorial_numbers(n, k, 1, lam, "r")
        unit_root = fps([1, 0, F(1, 4)], 8).rational_power(F(1, 2)) * 2
        unit_arg = (identity(8) + unit_root) / 2
        t1 = ((unit_arg ** 2).rational_power(lam) - 1) / lam
        for k in range(4):
            series = t1**k / math.factorial(k)
            for n in range(k, 9):
                assert series.egf_coefficient(n) == central_factorial_numbers(n, k, 1, lam)


def test_central_variant_degenerations():
    for n in range(9):
        for k in range(n + 1):
            for kind in (1, 2):
                assert (central_factorial_numbers(n, k, kind, 0)
                        == central_factorial_numbers(n, k, kind))
                assert (central_factorial_numbers(n, k, kind, 1, "r")
                        == central_factorial_numbers(n, k, kind))


def test_gould_hopper_values():
    for n in range(7):
        for k in range(n + 1):
            assert gould_hopper(n, k, 1, 0) == (1 if n == k else 0)
    assert gould_hopper(1, 0, 2, 3) == 3
    assert gould_hopper(1, 1, 2, 3) == 2
    with pytest.raises(ValueError):
        gould_hopper(2, 1, 0, 3)


def test_gould_hopper_triple_sum_cross_check():
    for (r, s) in ((F(2), F(3)), (F(1), F(-1))):
        for n in range(7):
            for k in range(n + 1):
                assert gould_hopper(n, k, r, s) == gould_hopper_sum(n, k, r, s)


def test_gould_hopper_vandermonde_at_unit_scale():
    from polystirling.polynomials import falling_number

    # (x+s)_n = sum_k C(n,k) (s)_{n-k} (x)_k
    for s in (F(3), F(-1, 2)):
        for n in range(7):
            for k in range(n + 1):
                expected = math.comb(n, k) * falling_number(s, n - k)
                assert gould_hopper(n, k, 1, s) == expected


def test_bernoulli_numbers():
    values = [bernoulli_number(n) for n in range(9)]
    assert values == [1, F(-1, 2), F(1, 6), 0, F(-1, 30), 0, F(1, 42), 0, F(-1, 30)]


def test_euler_numbers_at_zero():
    values = [euler_number(n) for n in range(8)]
    assert values == [1, F(-1, 2), 0, F(1, 4), 0, F(-1, 2), 0, F(17, 8)]


def test_bernoulli_second_kind_numbers():
    values = [bernoulli2nd_number(n) for n in range(5)]
    assert values == [1, F(1, 2), F(-1, 6), F(1, 4), F(-19, 30)]


def test_bell_numbers_count_partitions():
    for n in range(7):
        assert bell_value(n) == sum(count_set_partitions(n, k) for k in range(n + 1))
    assert bell_value(3) == 5
    assert bell_value(3, F(1, 2)) == F(1, 2) + 3 * F(1, 4) + F(1, 8)


def test_scalar_sequence_api():
    seq = scalar_sequence("bernoulli", 4)
    assert seq.values[2] == F(1, 6)
    assert scalar_sequence("bell", 3, a=1).values[3] == 5
    with pytest.raises(ValueError):
        scalar_sequence("nope", 3)
