"""Eulerian numbers and polynomials, classical and family-associated.

The classical triangle is generated by the two-term recurrence
A(n,k) = (k+1) A(n-1,k) + (n-k) A(n-1,k-1) with the padding convention
A(n,n) = 0 for n >= 1 (rows have n+1 entries so classical and associated
tables share one shape), and is cross-checked against the alternating
explicit sum and against exhaustive permutation-descent counting.

For a polynomial sequence P, the associated numbers A(n,k;P) are the
coefficients of p_n in the shifted binomial basis C(x+n-k-1, n); they are
computed from the alternating-sum formula
A(n,k;P) = sum_l (-1)^l C(n+1,l) p_n(k-l+1), and independently from an
exact linear solve against the binomial basis. A Frobenius-type bridge
converts between A(n,k;P) and the associated Stirling numbers of the
second kind whenever p_n(0) = 0 for n >= 1. The bivariate generating
function is expanded with polynomial-in-x coefficients, dividing by the
denominator (with constant term 1-x) through exact polynomial division.

Printed-source quirks handled here: the symmetry statement for odd delta
series is read as the plain equality A(n,k;P) = A(n,n-1-k;P), and the two
published sign exponents for the Frobenius bridge ((k-l-1) vs (k-j+1))
agree in parity, so the implementation uses the parity of k-j+1 for both.
"""

from __future__ import annotations

import math
from fractions import Fraction
from functools import lru_cache
from itertools import permutations

from .associated import s2_assoc
from .families import PolynomialFamily, UnsupportedFamilyError
from .polynomials import (
    ONE,
    X,
    ZERO,
    Polynomial,
    binomial,
    falling_factorial,
    solve_linear_system,
)
from .series import FormalPowerSeries

DESCENT_ORACLE_LIMIT = 9


# -- classical triangle ------------------------------------------------------------


@lru_cache(maxsize=None)
def eulerian_row(n: int) -> tuple[Fraction, ...]:
    """Row n of the classical triangle, padded with the zero at k = n."""
    if n == 0:
        return (Fraction(1),)
    prev = eulerian_row(n - 1)

    def prev_at(k: int) -> Fraction:
        return prev[k] if 0 <= k <= n - 1 else Fraction(0)

    return tuple((k + 1) * prev_at(k) + (n - k) * prev_at(k - 1) for k in range(n + 1))


def eulerian_number(n: int, k: int) -> Fraction:
    if not 0 <= k <= n:
        raise ValueError(f"need 0 <= k <= n, got n={n}, k={k}")
    return eulerian_row(n)[k]


def eulerian_number_explicit(n: int, k: int) -> Fraction:
    """Alternating-sum route: sum_i (-1)^i (k+1-i)^n C(n+1, i)."""
    if not 0 <= k <= n:
        raise ValueError(f"need 0 <= k <= n, got n={n}, k={k}")
    return sum(
        (Fraction((-1) ** i * (k + 1 - i) ** n * math.comb(n + 1, i)) for i in range(k + 1)),
        Fraction(0),
    )


def eulerian_polynomial(n: int) -> Polynomial:
    return Polynomial(eulerian_row(n))


def descent_count_row(n: int) -> tuple[int, ...]:
    """Counts of permutations of [n] by number of descents, exhaustively.

    Padded to n+1 entries to align with eulerian_row. Guarded against
    factorial blow-up.
    """
    if n > DESCENT_ORACLE_LIMIT:
        raise ValueError(f"oracle limit: descent enumeration capped at n={DESCENT_ORACLE_LIMIT}")
    if n == 0:
        return (1,)
    counts = [0] * (n + 1)
    for perm in permutations(range(n)):
        counts[sum(1 for i in range(n - 1) if perm[i] > perm[i + 1])] += 1
    return tuple(counts)


# -- associated numbers ---------------------------------------------------------------


@lru_cache(maxsize=None)
def eulerian_assoc_row(fam: PolynomialFamily, n: int) -> tuple[Fraction, ...]:
    p = fam.poly(n)
    return tuple(
        sum(
            ((-1) ** l * math.comb(n + 1, l) * p(k - l + 1) for l in range(k + 1)),
            Fraction(0),
        )
        for k in range(n + 1)
    )


def eulerian_assoc(fam: PolynomialFamily, n: int, k: int) -> Fraction:
    """A(n,k;P) by the alternating sum over shifted values of p_n."""
    if not 0 <= k <= n:
        raise ValueError(f"need 0 <= k <= n, got n={n}, k={k}")
    return eulerian_assoc_row(fam, n)[k]


def eulerian_assoc_polynomial(fam: PolynomialFamily, n: int) -> Polynomial:
    return Polynomial(eulerian_assoc_row(fam, n))


def binomial_basis_polynomial(n: int, k: int) -> Polynomial:
    """C(x + n - k - 1, n) as an exact polynomial of degree n in x."""
    shifted = falling_factorial(n)(Polynomial([n - k - 1, 1]))
    return shifted / math.factorial(n)


def worpitzky_coefficients(fam: PolynomialFamily, n: int) -> list[Fraction]:
    """Expansion of p_n in the basis C(x+n-k-1, n), by an exact linear solve.

    Independent of the alternating-sum route; the basis is not graded, so
    this is a full (n+1) x (n+1) system rather than a triangular solve.
    """
    basis = [binomial_basis_polynomial(n, k) for k in range(n + 1)]
    rows = [[basis[k].coefficient(i) for k in range(n + 1)] for i in range(n + 1)]
    rhs = [fam.poly(n).coefficient(i) for i in range(n + 1)]
    return solve_linear_system(rows, rhs)


def worpitzky_reconstruction(fam: PolynomialFamily, n: int) -> Polynomial:
    """sum_k A(n,k;P) C(x+n-k-1, n); equals p_n when the expansion is right."""
    row = eulerian_assoc_row(fam, n)
    return sum(
        (row[k] * binomial_basis_polynomial(n, k) for k in range(n + 1)), Polynomial()
    )


# -- Frobenius bridge -------------------------------------------------------------------


def _require_vanishing(fam: PolynomialFamily, n_max: int) -> None:
    if not fam.vanishes_at_zero(n_max):
        raise UnsupportedFamilyError(
            f"Frobenius hypothesis violated for {fam.label}: p_n(0) != 0"
        )


def frobenius_a_from_s2(fam: PolynomialFamily, n: int, k: int) -> Fraction:
    """A(n,k;P) from the associated second-kind numbers; needs p_n(0) = 0, n >= 1."""
    if n < 1 or not 0 <= k <= n:
        raise ValueError(f"need n >= 1 and 0 <= k <= n, got n={n}, k={k}")
    _require_vanishing(fam, n)
    total = Fraction(0)
    for j in range(1, min(k + 1, n) + 1):
        sign = -1 if (k - j + 1) % 2 else 1
        total += sign * math.factorial(j) * s2_assoc(fam, n, j) * binomial(n - j, k - j + 1)
    return total


def frobenius_s2_from_a(fam: PolynomialFamily, n: int, k: int) -> Fraction:
    """S2(n,k;P) from the associated Eulerian numbers; needs p_n(0) = 0, n >= 1."""
    if n < 1 or not 0 <= k <= n:
        raise ValueError(f"need n >= 1 and 0 <= k <= n, got n={n}, k={k}")
    _require_vanishing(fam, n)
    total = sum(
        (math.comb(n - j, k - j) * eulerian_assoc(fam, n, j - 1) for j in range(1, k + 1)),
        Fraction(0),
    )
    return total / math.factorial(k)


# -- bivariate generating function --------------------------------------------------------

# A series in t with Polynomial-in-x coefficients is a plain list of
# Polynomial; index = power of t.


def _ps_mul(a: list[Polynomial], b: list[Polynomial]) -> list[Polynomial]:
    n = min(len(a), len(b)) - 1
    out = [ZERO] * (n + 1)
    for i, pa in enumerate(a[: n + 1]):
        if pa.is_zero:
            continue
        for j in range(n + 1 - i):
            pb = b[j]
            if not pb.is_zero:
                out[i + j] = out[i + j] + pa * pb
    return out


def _ps_exp(u: list[Polynomial]) -> list[Polynomial]:
    if not u[0].is_zero:
        raise ValueError("exponential of a polynomial series needs order >= 1")
    n = len(u) - 1
    out = [ONE] + [ZERO] * n
    term = [ONE] + [ZERO] * n
    for k in range(1, n + 1):
        term = [p / k for p in _ps_mul(term, u)]
        out = [a + b for a, b in zip(out, term)]
    return out


def _ps_compose_scalar(outer: FormalPowerSeries, inner: list[Polynomial]) -> list[Polynomial]:
    if not inner[0].is_zero:
        raise ValueError("inner not delta: nonzero constant term")
    n = min(outer.trunc_order, len(inner) - 1)
    acc = [ZERO] * (n + 1)
    for c in reversed(outer.coeffs[: n + 1]):
        acc = _ps_mul(acc, inner[: n + 1])
        acc[0] = acc[0] + c
    return acc


def _ps_invert_scalar_unit(a: list[Polynomial]) -> list[Polynomial]:
    if a[0].degree != 0:
        raise ValueError("inversion needs a nonzero constant leading coefficient")
    inv0 = 1 / a[0].coefficient(0)
    out = [Polynomial([inv0])]
    for i in range(1, len(a)):
        acc = ZERO
        for j in range(1, i + 1):
            if not a[j].is_zero:
                acc = acc + a[j] * out[i - j]
        out.append(acc * -inv0)
    return out


def _divide_by_one_minus_x(p: Polynomial) -> Polynomial:
    # synthetic division by (x - 1), negated; remainder p(1) must vanish
    if p.is_zero:
        return ZERO
    coeffs = list(p.coeffs)
    quotient = [Fraction(0)] * (len(coeffs) - 1)
    carry = Fraction(0)
    for i in range(len(coeffs) - 1, 0, -1):
        carry = coeffs[i] + carry
        quotient[i - 1] = carry
    if coeffs[0] + carry != 0:
        raise ArithmeticError("division by (1 - x) left a remainder")
    return Polynomial([-q for q in quotient])


def eulerian_gf_polynomials(fam: PolynomialFamily, max_n: int) -> list[Polynomial]:
    """A_0(x;P)..A_max_n(x;P) read off the bivariate generating function.

    The generating function (1-x) e^{fbar((1-x)t)} / (g(fbar((1-x)t))
    (1 - x e^{fbar((1-x)t)})) is expanded as a t-series with polynomial
    coefficients; each division by the denominator's constant term (1-x)
    is performed as exact polynomial division, so a nonzero remainder
    would surface immediately as an error.
    """
    if fam.sheffer is None:
        raise UnsupportedFamilyError(f"no Sheffer pair for family {fam.label}")
    pair = fam.sheffer
    n = max_n
    one_minus_x = Polynomial([1, -1])
    if n == 0:
        fbar_coeffs = [Fraction(0)]
    else:
        fbar_coeffs = list(pair.f_series(n).revert().coeffs)
    substituted = [fbar_coeffs[i] * one_minus_x**i for i in range(n + 1)]
    exp_part = _ps_exp(substituted)
    if pair.is_associated:
        core = exp_part
    else:
        g_of = _ps_compose_scalar(pair.g_series(n), substituted)
        core = _ps_mul(exp_part, _ps_invert_scalar_unit(g_of))
    numerator = [one_minus_x * p for p in core]
    denominator = [ONE - X * exp_part[0]] + [-(X * p) for p in exp_part[1:]]
    quotient: list[Polynomial] = []
    for i in range(n + 1):
        acc = numerator[i]
        for j in range(1, i + 1):
            if not denominator[j].is_zero:
                acc = acc - denominator[j] * quotient[i - j]
        quotient.append(_divide_by_one_minus_x(acc))
    return [quotient[i] * math.factorial(i) for i in range(n + 1)]


# -- identity case generators (consumed by the verify suites) ------------------------------


def geometric_expansion_cases(fam: PolynomialFamily, n: int, terms: int):
    """A_n(x;P)/(1-x)^{n+1} = sum_j p_n(j+1) x^j, coefficientwise."""
    row = eulerian_assoc_row(fam, n)
    p = fam.poly(n)
    for j in range(terms):
        lhs = sum(
            (row[i] * math.comb(n + j - i, n) for i in range(min(j, n) + 1)), Fraction(0)
        )
        yield {"n": n, "j": j, "family": fam.label}, p(j + 1), lhs


def bar_polynomial_recurrence_cases(fam: PolynomialFamily, max_n: int):
    """A_{n+1}(x; bar P) = (1+nx) A_n(x;P) + x(1-x) A_n'(x;P)."""
    from .associated import bar_transform

    bar = bar_transform(fam)
    for n in range(max_n):
        lhs = eulerian_assoc_polynomial(bar, n + 1)
        an = eulerian_assoc_polynomial(fam, n)
        rhs = Polynomial([1, n]) * an + Polynomial([0, 1, -1]) * an.derivative()
        yield {"n": n + 1, "family": fam.label}, rhs, lhs


def bar_entry_recurrence_cases(fam: PolynomialFamily, max_n: int):
    """Entrywise bar recurrence, including the k = 0 boundary row."""
    from .associated import bar_transform

    bar = bar_transform(fam)
    for n in range(1, max_n + 1):
        yield ({"n": n, "k": 0, "family": fam.label},
               fam.poly(n - 1)(1), eulerian_assoc(bar, n, 0))
        for k in range(1, n):
            rhs = (k + 1) * eulerian_assoc(fam, n - 1, k)
            if k - 1 <= n - 1:
                rhs += (n - k) * eulerian_assoc(fam, n - 1, k - 1)
            yield {"n": n, "k": k, "family": fam.label}, rhs, eulerian_assoc(bar, n, k)


def row_sum_cases(fam: PolynomialFamily, max_n: int):
    """A_n(1;P) = p_{n,n} n!."""
    for n in range(max_n + 1):
        expected = fam.poly(n).leading * math.factorial(n)
        got = sum(eulerian_assoc_row(fam, n), Fraction(0))
        yield {"n": n, "family": fam.label}, expected, got


def leading_coefficient_cases(fam: PolynomialFamily, max_n: int):
    """For families vanishing at 0: deg A_n <= n-1 with stated top coefficient."""
    _require_vanishing(fam, max_n)
    for n in range(1, max_n + 1):
        poly = eulerian_assoc_polynomial(fam, n)
        yield ({"n": n, "check": "degree-bound", "family": fam.label},
               True, poly.degree <= n - 1)
        p = fam.poly(n)
        expected = sum(
            ((-1) ** (n - k) * p.coefficient(k) for k in range(1, n + 1)), Fraction(0)
        )
        yield ({"n": n, "check": "top-coefficient", "family": fam.label},
               expected, poly.coefficient(n - 1))
        yield ({"n": n, "check": "s2-vanishes", "family": fam.label},
               Fraction(0), s2_assoc(fam, n, 0))


def _is_odd_delta(fam: PolynomialFamily, order: int) -> bool:
    if fam.sheffer is None or not fam.sheffer.is_associated:
        return False
    f = fam.sheffer.f_series(order)
    return all(c == 0 for c in f.coeffs[0::2])


def symmetry_cases(fam: PolynomialFamily, max_n: int):
    """A(n,k;P) = A(n,n-1-k;P) for associated families with odd delta series."""
    if not _is_odd_delta(fam, max_n + 2):
        raise UnsupportedFamilyError(
            f"symmetry requires g = 1 and an odd delta series; not satisfied by {fam.label}"
        )
    for n in range(1, max_n + 1):
        row = eulerian_assoc_row(fam, n)
        for k in range(n):
            yield {"n": n, "k": k, "family": fam.label}, row[n - 1 - k], row[k]


def frobenius_roundtrip_cases(fam: PolynomialFamily, max_n: int):
    _require_vanishing(fam, max_n)
    for n in range(1, max_n + 1):
        for k in range(n + 1):
            yield ({"n": n, "k": k, "direction": "a-from-s2", "family": fam.label},
                   eulerian_assoc(fam, n, k), frobenius_a_from_s2(fam, n, k))
            yield ({"n": n, "k": k, "direction": "s2-from-a", "family": fam.label},
                   s2_assoc(fam, n, k), frobenius_s2_from_a(fam, n, k))


def gf_cases(fam: PolynomialFamily, max_n: int):
    polys = eulerian_gf_polynomials(fam, max_n)
    for n in range(max_n + 1):
        yield {"n": n, "family": fam.label}, eulerian_assoc_polynomial(fam, n), polys[n]


def worpitzky_cases(fam: PolynomialFamily, max_n: int):
    for n in range(max_n + 1):
        solved = worpitzky_coefficients(fam, n)
        row = eulerian_assoc_row(fam, n)
        yield {"n": n, "check": "coefficients", "family": fam.label}, tuple(row), tuple(solved)
        yield ({"n": n, "check": "reconstruction", "family": fam.label},
               fam.poly(n), worpitzky_reconstruction(fam, n))


# -- classical identity case generators ------------------------------------------------------


def classical_descent_cases(max_n: int):
    for n in range(max_n + 1):
        yield ({"n": n}, tuple(Fraction(c) for c in descent_count_row(n)), eulerian_row(n))


def classical_explicit_cases(max_n: int):
    for n in range(max_n + 1):
        for k in range(n + 1):
            yield {"n": n, "k": k}, eulerian_number_explicit(n, k), eulerian_number(n, k)


def classical_convolution_cases(max_n: int):
    """A_n(x) = sum_{k<n} C(n,k) A_k(x) (x-1)^{n-1-k}."""
    for n in range(1, max_n + 1):
        rhs = sum(
            (math.comb(n, k) * eulerian_polynomial(k) * Polynomial([-1, 1]) ** (n - 1 - k)
             for k in range(n)),
            Polynomial(),
        )
        yield {"n": n}, rhs, eulerian_polynomial(n)


def classical_derivative_cases(max_n: int):
    """A_n(x) = (1 + (n-1)x) A_{n-1}(x) + x(1-x) A_{n-1}'(x)."""
    for n in range(1, max_n + 1):
        prev = eulerian_polynomial(n - 1)
        rhs = Polynomial([1, n - 1]) * prev + Polynomial([0, 1, -1]) * prev.derivative()
        yield {"n": n}, rhs, eulerian_polynomial(n)


def classical_symmetry_cases(max_n: int):
    for n in range(1, max_n + 1):
        for k in range(n):
            yield {"n": n, "k": k}, eulerian_number(n, n - 1 - k), eulerian_number(n, k)


def classical_row_sum_cases(max_n: int):
    for n in range(max_n + 1):
        yield ({"n": n}, Fraction(math.factorial(n)), sum(eulerian_row(n), Fraction(0)))


def classical_worpitzky_cases(max_n: int):
    """Both shifted-binomial forms reconstruct x^n."""
    for n in range(max_n + 1):
        row = eulerian_row(n)
        monomial = Polynomial([0] * n + [1])
        by_k = sum(
            (row[k] * (falling_factorial(n)(Polynomial([k, 1])) / math.factorial(n))
             for k in range(n + 1)),
            Polynomial(),
        )
        yield {"n": n, "form": "ascending-shift"}, monomial, by_k
        mirrored = sum(
            (row[k] * binomial_basis_polynomial(n, k) for k in range(n + 1)), Polynomial()
        )
        yield {"n": n, "form": "descending-shift"}, monomial, mirrored


def power_sum_identity(n: int, m: int, x0) -> tuple[Fraction, Fraction]:
    """Finite power sum sum_{i<=m} i^n x^i against its Eulerian closed form."""
    x0 = Fraction(x0)
    if x0 in (0, 1):
        raise ValueError("the closed form needs x0 outside {0, 1}")
    lhs = sum((Fraction(i**n) * x0**i for i in range(1, m + 1)), Fraction(0))
    rhs = Fraction(0)
    for l in range(1, n + 1):
        rhs += ((-1) ** (n + l) * math.comb(n, l) * x0 ** (m + 1)
                * eulerian_polynomial(n - l)(x0) / (x0 - 1) ** (n - l + 1) * m**l)
    rhs += (-1) ** n * x0 * (x0**m - 1) / (x0 - 1) ** (n + 1) * eulerian_polynomial(n)(x0)
    return lhs, rhs
