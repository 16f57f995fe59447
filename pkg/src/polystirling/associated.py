"""Stirling numbers of both kinds associated with a polynomial sequence.

For a sequence P = {p_n} with deg p_n = n and p_0 = 1:

* the second-kind numbers expand p_n in falling factorials,
  p_n(x) = sum_k S2(n,k;P) (x)_k;
* the first-kind numbers expand the falling factorials back,
  (x)_n = sum_k S1(n,k;P) p_k(x).

The two triangles are mutually inverse. S2 is computed by the explicit
sum over classical Stirling numbers against the monomial coefficients of
p_n, with the finite-difference functional route as an independent
companion; S1 goes through an exact triangular solve for every family,
Sheffer or not, with the Sheffer functional route as the cross-check.
Generating-function extraction is available for Sheffer families, and the
logarithm/exponential attached to a delta series converts between the two
pictures.
"""

from __future__ import annotations

import math
import random
from fractions import Fraction
from functools import lru_cache

from .families import PolynomialFamily, UnsupportedFamilyError
from .polynomials import ONE, X, Polynomial, falling_factorial
from .reports import Report, run_check
from .series import FormalPowerSeries, expm1_series, log1p_series
from .triangles import stirling1, stirling2
from .umbral import functional

# -- second kind -----------------------------------------------------------------


@lru_cache(maxsize=None)
def _s2_row(fam: PolynomialFamily, n: int) -> tuple[Fraction, ...]:
    p = fam.poly(n)
    return tuple(
        sum((stirling2(l, k) * p.coefficient(l) for l in range(k, n + 1)), Fraction(0))
        for k in range(n + 1)
    )


def s2_assoc(fam: PolynomialFamily, n: int, k: int) -> Fraction:
    """S2(n,k;P) by the explicit sum sum_l S2(l,k) p_{n,l}."""
    if not 0 <= k <= n:
        raise ValueError(f"need 0 <= k <= n, got n={n}, k={k}")
    return _s2_row(fam, n)[k]


def s2_assoc_finite_difference(fam: PolynomialFamily, n: int, k: int) -> Fraction:
    """Independent route: the k-th finite difference of p_n at 0, over k!."""
    if not 0 <= k <= n:
        raise ValueError(f"need 0 <= k <= n, got n={n}, k={k}")
    p = fam.poly(n)
    total = sum(
        ((-1) ** (k - j) * math.comb(k, j) * p(j) for j in range(k + 1)), Fraction(0)
    )
    return total / math.factorial(k)


# -- first kind --------------------------------------------------------------------


@lru_cache(maxsize=None)
def _s1_row(fam: PolynomialFamily, n: int) -> tuple[Fraction, ...]:
    basis = [fam.poly(k) for k in range(n + 1)]
    coeffs = []
    rem = falling_factorial(n)
    out = [Fraction(0)] * (n + 1)
    for k in range(n, -1, -1):
        c = rem.coefficient(k) / basis[k].coefficient(k)
        if c != 0:
            out[k] = c
            rem = rem - c * basis[k]
    return tuple(out)


def s1_assoc(fam: PolynomialFamily, n: int, k: int) -> Fraction:
    """S1(n,k;P) by a triangular solve of (x)_n against the family basis."""
    if not 0 <= k <= n:
        raise ValueError(f"need 0 <= k <= n, got n={n}, k={k}")
    return _s1_row(fam, n)[k]


def s1_assoc_functional(fam: PolynomialFamily, n: int, k: int) -> Fraction:
    """Sheffer route: <g f^k | (x)_n>/k!. Requires a Sheffer pair."""
    if fam.sheffer is None:
        raise UnsupportedFamilyError(f"no Sheffer pair for family {fam.label}")
    if not 0 <= k <= n:
        raise ValueError(f"need 0 <= k <= n, got n={n}, k={k}")
    pair = fam.sheffer
    weight = pair.g_series(n) * pair.f_series(n) ** k
    return functional(weight, falling_factorial(n)) / math.factorial(k)


# -- generating functions -----------------------------------------------------------


def s2_assoc_gf(fam: PolynomialFamily, k: int, order: int) -> FormalPowerSeries:
    """Series whose t^n/n! coefficients are S2(n,k;P); Sheffer families only."""
    if fam.sheffer is None:
        raise UnsupportedFamilyError(f"no Sheffer pair for family {fam.label}")
    pair = fam.sheffer
    fbar = pair.f_series(order).revert()
    core = (expm1_series(order).compose(fbar)) ** k / math.factorial(k)
    if pair.is_associated:
        return core
    return core / pair.g_series(order).compose(fbar)


def s1_assoc_gf(fam: PolynomialFamily, k: int, order: int) -> FormalPowerSeries:
    """Series whose t^n/n! coefficients are S1(n,k;P); needs g = 1."""
    if fam.sheffer is None:
        raise UnsupportedFamilyError(f"no Sheffer pair for family {fam.label}")
    if not fam.sheffer.is_associated:
        raise UnsupportedFamilyError(
            f"first-kind generating function needs an associated family (g = 1); "
            f"family {fam.label} has g != 1"
        )
    return associated_log(fam.sheffer.f_series(order), order) ** k / math.factorial(k)


def associated_log(f: FormalPowerSeries, order: int) -> FormalPowerSeries:
    """The logarithm attached to a delta series f: f(log(1 + t))."""
    if not f.is_delta:
        raise ValueError("associated logarithm requires a delta series")
    return f.compose(log1p_series(order))


def associated_exp(f: FormalPowerSeries, order: int) -> FormalPowerSeries:
    """The exponential attached to a delta series f: e^{fbar(t)} - 1."""
    if not f.is_delta:
        raise ValueError("associated exponential requires a delta series")
    work = min(f.trunc_order, order)
    return expm1_series(order).compose(f.truncate(work).revert())


# -- derived families ----------------------------------------------------------------


@lru_cache(maxsize=None)
def bar_transform(fam: PolynomialFamily) -> PolynomialFamily:
    """The family with members 1, x p_0(x), x p_1(x), ... (x times a shift)."""
    base_poly = fam.poly

    def poly(n: int) -> Polynomial:
        return ONE if n == 0 else X * base_poly(n - 1)

    return PolynomialFamily(
        id=fam.id + ".bar",
        params=fam.params,
        poly_fn=lru_cache(maxsize=None)(poly),
    )


def monomial_coefficients_from_s2(fam: PolynomialFamily, n: int) -> list[Fraction]:
    """Recover p_{n,l} from the second-kind triangle via classical S1."""
    return [
        sum((stirling1(k, l) * s2_assoc(fam, n, k) for k in range(l, n + 1)), Fraction(0))
        for l in range(n + 1)
    ]


# -- verification ---------------------------------------------------------------------


def _random_rational(rng: random.Random) -> Fraction:
    return Fraction(rng.randint(-9, 9), rng.randint(1, 9))


def verify_orthogonality(fam: PolynomialFamily, max_n: int,
                         rng: random.Random | None = None,
                         vectors: int = 5) -> Report:
    """Both orthogonality products plus the inverse-relation round trips."""
    if rng is None:
        rng = random.Random(f"orthogonality:{fam.label}")
    rng_range = f"n<={max_n}"

    def product_cases(first_kind_outer: bool):
        for n in range(max_n + 1):
            for l in range(n + 1):
                if first_kind_outer:
                    got = sum(
                        (s1_assoc(fam, n, k) * s2_assoc(fam, k, l) for k in range(l, n + 1)),
                        Fraction(0),
                    )
                else:
                    got = sum(
                        (s2_assoc(fam, n, k) * s1_assoc(fam, k, l) for k in range(l, n + 1)),
                        Fraction(0),
                    )
                yield {"n": n, "l": l, "family": fam.label}, Fraction(int(n == l)), got

    def roundtrip_lower():
        for trial in range(vectors):
            c = [_random_rational(rng) for _ in range(max_n + 1)]
            a = [
                sum((s2_assoc(fam, n, k) * c[k] for k in range(n + 1)), Fraction(0))
                for n in range(max_n + 1)
            ]
            back = [
                sum((s1_assoc(fam, n, k) * a[k] for k in range(n + 1)), Fraction(0))
                for n in range(max_n + 1)
            ]
            yield {"trial": trial, "family": fam.label}, tuple(c), tuple(back)

    def roundtrip_upper():
        m = max_n
        for trial in range(vectors):
            c = [_random_rational(rng) for _ in range(m + 1)]
            a = [
                sum((s2_assoc(fam, k, n) * c[k] for k in range(n, m + 1)), Fraction(0))
                for n in range(m + 1)
            ]
            back = [
                sum((s1_assoc(fam, k, n) * a[k] for k in range(n, m + 1)), Fraction(0))
                for n in range(m + 1)
            ]
            yield {"trial": trial, "family": fam.label}, tuple(c), tuple(back)

    checks = (
        run_check("orthogonality-first-second", rng_range, product_cases(True)),
        run_check("orthogonality-second-first", rng_range, product_cases(False)),
        run_check("inverse-relation-lower", f"{vectors} random vectors", roundtrip_lower()),
        run_check("inverse-relation-upper", f"{vectors} random vectors", roundtrip_upper()),
    )
    return Report("orthogonality", fam.label, checks)


def bar_s2_recurrence_cases(fam: PolynomialFamily, max_n: int):
    """S2(n+1,k;bar P) = S2(n,k-1;P) + k S2(n,k;P), zero below k=0."""
    bar = bar_transform(fam)
    for n in range(max_n):
        for k in range(n + 2):
            lhs = s2_assoc(bar, n + 1, k)
            rhs = (s2_assoc(fam, n, k - 1) if 1 <= k <= n + 1 else Fraction(0))
            if k <= n:
                rhs += k * s2_assoc(fam, n, k)
            yield {"n": n + 1, "k": k, "family": fam.label}, rhs, lhs


def bar_s1_recurrence_cases(fam: PolynomialFamily, max_n: int):
    """S1(n+1,k;bar P) = S1(n,k-1;P) - n S1(n,k;bar P), exactly as stated.

    The right side genuinely mixes the base family and its bar transform.
    """
    bar = bar_transform(fam)
    for n in range(max_n):
        for k in range(n + 2):
            lhs = s1_assoc(bar, n + 1, k)
            rhs = (s1_assoc(fam, n, k - 1) if 1 <= k <= n + 1 else Fraction(0))
            if k <= n:
                rhs -= n * s1_assoc(bar, n, k)
            yield {"n": n + 1, "k": k, "family": fam.label}, rhs, lhs


def falling_alternating_sum_cases(fam: PolynomialFamily, max_n: int):
    """(-1)^n sum_k S1(n,k;P) p_k(-1) = n!."""
    for n in range(max_n + 1):
        got = (-1) ** n * sum(
            (s1_assoc(fam, n, k) * fam.poly(k)(-1) for k in range(n + 1)), Fraction(0)
        )
        yield {"n": n, "family": fam.label}, Fraction(math.factorial(n)), got


def rising_reflection_cases(fam: PolynomialFamily, max_n: int):
    """(-1)^n sum_k S1(n,k;P) p_k(-x) equals the rising factorial."""
    from .polynomials import rising_factorial

    for n in range(max_n + 1):
        got = sum(
            ((-1) ** n * s1_assoc(fam, n, k) * fam.poly(k).scale_argument(-1)
             for k in range(n + 1)),
            Polynomial(),
        )
        yield {"n": n, "family": fam.label}, rising_factorial(n), got
