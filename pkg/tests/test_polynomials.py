from fractions import Fraction as F

import pytest
from hypothesis import given, strategies as st

from polystirling.polynomials import (
    NEG_INFINITY,
    ONE,
    X,
    Polynomial,
    binomial,
    central_factorial,
    expand_in_basis,
    falling_factorial,
    falling_number,
    rising_factorial,
    solve_linear_system,
)

rationals = st.builds(F, st.integers(-6, 6), st.integers(1, 4))
polys = st.lists(rationals, max_size=5).map(Polynomial)


def test_difference_of_squares():
    assert Polynomial([1, 1]) * Polynomial([-1, 1]) == Polynomial([-1, 0, 1])


def test_zero_is_absorbing():
    p = Polynomial([3, F(1, 2), 7])
    assert p * Polynomial() == Polynomial()
    assert (p * 0).is_zero


def test_cubic_product_expansion():
    # x(x-1)(x-2) multiplied out by hand
    prod = X * Polynomial([-1, 1]) * Polynomial([-2, 1])
    assert prod == Polynomial([0, 2, -3, 1])


def test_evaluation():
    assert Polynomial([-1, 0, 1])(3) == 8
    assert Polynomial([1])(F(100, 7)) == 1
    assert Polynomial([0, 2, -3, 1])(4) == 24  # 4*3*2


def test_zero_polynomial_degree_sentinel():
    assert Polynomial().degree == NEG_INFINITY
    assert Polynomial([0, 0]).degree == NEG_INFINITY
    assert Polynomial().is_zero


def test_trailing_zeros_trimmed():
    assert Polynomial([1, 2, 0, 0]).coeffs == (F(1), F(2))


@pytest.mark.parametrize("n,step,expected", [
    (0, 1, [1]),
    (3, 1, [0, 2, -3, 1]),
    (2, F(1, 2), [0, F(-1, 2), 1]),
])
def test_falling_factorial(n, step, expected):
    assert falling_factorial(n, step) == Polynomial(expected)


@pytest.mark.parametrize("n,step,expected", [
    (0, 1, [1]),
    (3, 1, [0, 2, 3, 1]),
])
def test_rising_factorial(n, step, expected):
    assert rising_factorial(n, step) == Polynomial(expected)


def test_rising_is_reflected_falling():
    for n in range(9):
        reflected = falling_factorial(n).scale_argument(-1) * F((-1) ** n)
        assert rising_factorial(n) == reflected


@pytest.mark.parametrize("n,step,expected", [
    (0, 1, [1]),
    (2, 1, [0, 0, 1]),
    (3, 1, [0, F(-1, 4), 0, 1]),
])
def test_central_factorial(n, step, expected):
    assert central_factorial(n, step) == Polynomial(expected)


def test_step_zero_degenerates_to_monomials():
    for n in range(13):
        monomial = Polynomial([0] * n + [1])
        assert falling_factorial(n, 0) == monomial
        assert rising_factorial(n, 0) == monomial
        assert central_factorial(n, 0) == monomial


def test_falling_factorial_at_its_length_is_factorial():
    import math

    for n in range(13):
        assert falling_factorial(n)(n) == math.factorial(n)


@given(polys, polys, polys)
def test_ring_axioms(p, q, r):
    assert p + q == q + p
    assert p * q == q * p
    assert (p + q) + r == p + (q + r)
    assert (p * q) * r == p * (q * r)
    assert p * (q + r) == p * q + p * r


@given(polys)
def test_additive_inverse(p):
    assert (p - p).is_zero
    assert p + Polynomial() == p
    assert p * ONE == p


def test_composition_and_derivative():
    p = Polynomial([1, 0, 1])  # 1 + x^2
    assert p(Polynomial([1, 1])) == Polynomial([2, 2, 1])
    assert p.derivative() == Polynomial([0, 2])


def test_binomial_generalized():
    assert binomial(F(1, 2), 2) == F(-1, 8)
    assert binomial(-1, 3) == -1
    assert binomial(4, 2) == 6
    assert binomial(3, -1) == 0
    assert falling_number(4, 3) == 24


def test_expand_in_basis_roundtrip():
    basis = [falling_factorial(k) for k in range(6)]
    p = Polynomial([3, F(-1, 2), 0, 5, 0, F(7, 3)])
    coeffs = expand_in_basis(p, basis)
    rebuilt = sum((c * b for c, b in zip(coeffs, basis)), Polynomial())
    assert rebuilt == p


def test_expand_in_basis_rejects_bad_grading():
    with pytest.raises(ValueError):
        expand_in_basis(X, [ONE, ONE])
    with pytest.raises(ValueError):
        expand_in_basis(X**3, [ONE, X])


def test_solve_linear_system():
    rows = [[1, 2], [3, F(1, 2)]]
    sol = solve_linear_system(rows, [5, F(7, 2)])
    assert [sum(r * x for r, x in zip(row, sol)) for row in rows] == [5, F(7, 2)]
    with pytest.raises(ArithmeticError):
        solve_linear_system([[1, 1], [2, 2]], [1, 1])
