import math
from fractions import Fraction as F

import pytest

from polystirling.polynomials import Polynomial, X, falling_factorial
from polystirling.series import exp_scaled, exp_series, expm1_series, fps, identity
from polystirling.umbral import (
    ShefferPair,
    apply_operator,
    expand_in_sheffer,
    functional,
    sheffer_polynomials,
    sheffer_polynomials_by_recurrence,
)


def monomial(n):
    return Polynomial([0] * n + [1])


def test_monomial_pairing_is_factorial_delta():
    for k in range(5):
        tk = fps([0] * k + [1], 6)
        for n in range(6):
            expected = math.factorial(n) if n == k else 0
            assert functional(tk, monomial(n)) == expected


def test_exponential_functional_evaluates():
    p = Polynomial([-1, 0, 1])
    assert functional(exp_scaled(2, 4), p) == p(2) == 3


def test_squared_difference_functional():
    # (e^t - 1)^2 = t^2 + t^3 + ..., pairs with x^2 to 2
    f = expm1_series(4) ** 2
    assert functional(f, monomial(2)) == 2


def test_functional_insufficient_order():
    with pytest.raises(ValueError, match="insufficient order"):
        functional(fps([1], 1), monomial(3))


def test_operator_differentiates():
    t2 = fps([0, 0, 1], 5)
    assert apply_operator(t2, monomial(3)) == 6 * X


def test_operator_translates():
    assert apply_operator(exp_series(4), monomial(2)) == Polynomial([1, 2, 1])


def test_operator_moving_average():
    # (e^t - 1)/t x = x + 1/2, the unit-interval average
    f = expm1_series(3) / identity(3)
    assert apply_operator(f, X) == Polynomial([F(1, 2), 1])


def test_identity_pair_gives_monomials():
    pair = ShefferPair(None, identity)
    assert sheffer_polynomials(pair, 5) == [monomial(n) for n in range(6)]


def test_bernoulli_pair_first_member():
    pair = ShefferPair(lambda N: expm1_series(N + 1) / identity(N + 1), identity)
    polys = sheffer_polynomials(pair, 3)
    assert polys[1] == Polynomial([F(-1, 2), 1])
    assert polys[2] == Polynomial([F(1, 6), -1, 1])


def test_falling_factorial_pair():
    pair = ShefferPair(None, expm1_series)
    assert sheffer_polynomials(pair, 3)[3] == falling_factorial(3)


def test_recurrence_route_agrees():
    pairs = [
        ShefferPair(None, expm1_series),
        ShefferPair(lambda N: expm1_series(N + 1) / identity(N + 1), identity),
        ShefferPair(lambda N: (expm1_series(N) + 2) / 2, identity),
    ]
    for pair in pairs:
        assert sheffer_polynomials(pair, 8) == sheffer_polynomials_by_recurrence(pair, 8)


def test_expand_monomials_in_falling_basis_gives_partition_counts():
    from polystirling.triangles import stirling2

    pair = ShefferPair(None, expm1_series)
    for n in range(7):
        coeffs = expand_in_sheffer(monomial(n), pair)
        assert coeffs == [stirling2(n, k) for k in range(n + 1)]


def test_expand_own_member_is_unit_vector():
    pair = ShefferPair(lambda N: expm1_series(N + 1) / identity(N + 1), identity)
    polys = sheffer_polynomials(pair, 6)
    for n in range(7):
        coeffs = expand_in_sheffer(polys[n], pair)
        assert coeffs == [F(int(k == n)) for k in range(n + 1)]


def test_expand_falling_in_monomial_pair():
    pair = ShefferPair(None, identity)
    assert expand_in_sheffer(falling_factorial(3), pair) == [0, 2, -3, 1]


def test_pair_validation():
    with pytest.raises(ValueError):
        ShefferPair(None, exp_series)  # constant term 1, not delta
    with pytest.raises(ValueError):
        ShefferPair(lambda N: identity(N), identity)  # g not invertible


def test_biorthogonality_defining_property():
    pair = ShefferPair(lambda N: expm1_series(N + 1) / identity(N + 1), identity)
    polys = sheffer_polynomials(pair, 6)
    g = pair.g_series(6)
    f = pair.f_series(6)
    weight = g
    for k in range(7):
        for n in range(7):
            expected = math.factorial(n) if n == k else 0
            assert functional(weight, polys[n]) == expected
        weight = weight * f
