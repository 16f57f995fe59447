"""Classical number triangles and scalar sequences, exactly.

Every triangle here is computed primarily by exact basis conversion (a
triangular solve between two graded polynomial bases); the generating
function route is kept as an independent cross-check in the test suite.
Rows are memoized per parameter value.

Triangles: Stirling numbers of both kinds, their degenerate versions, Lah
and degenerate Lah numbers, central factorial numbers (classical, the
mixed degenerate T-variant, and the fully degenerate R-variant), and
Gould-Hopper numbers. Scalar sequences: Bernoulli, Euler (values at 0),
Bernoulli-of-the-second-kind, and Bell values.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Callable, Mapping

from .polynomials import (
    Polynomial,
    RationalLike,
    central_factorial,
    expand_in_basis,
    falling_factorial,
    falling_number,
    rational,
    rising_factorial,
)
from .series import expm1_series, identity, log1p_series


@dataclass(frozen=True)
class Triangle:
    """An immutable lower-triangular table of exact rationals."""

    name: str
    params: tuple[tuple[str, Fraction], ...]
    rows: tuple[tuple[Fraction, ...], ...]

    @property
    def max_n(self) -> int:
        return len(self.rows) - 1

    def entry(self, n: int, k: int) -> Fraction:
        return self.rows[n][k]


@dataclass(frozen=True)
class ScalarSequence:
    name: str
    values: tuple[Fraction, ...]


def build_triangle(name: str, max_n: int, entry: Callable[[int, int], Fraction],
                   params: Mapping[str, Fraction] | None = None) -> Triangle:
    rows = tuple(tuple(entry(n, k) for k in range(n + 1)) for n in range(max_n + 1))
    return Triangle(name, tuple(sorted((params or {}).items())), rows)


def _check_indices(n: int, k: int) -> None:
    if k < 0 or k > n:
        raise ValueError(f"triangle index out of range: n={n}, k={k}")


# -- Stirling numbers ----------------------------------------------------------


@lru_cache(maxsize=None)
def _stirling2_row(n: int) -> tuple[Fraction, ...]:
    if n == 0:
        return (Fraction(1),)
    prev = _stirling2_row(n - 1)
    row = [Fraction(0)] * (n + 1)
    for k in range(n + 1):
        if k >= 1:
            row[k] += prev[k - 1] if k - 1 <= n - 1 else 0
        if k <= n - 1:
            row[k] += k * prev[k]
    return tuple(row)


@lru_cache(maxsize=None)
def _stirling1_row(n: int) -> tuple[Fraction, ...]:
    # signed: (x)_n = sum_k S1(n,k) x^k
    if n == 0:
        return (Fraction(1),)
    prev = _stirling1_row(n - 1)
    row = [Fraction(0)] * (n + 1)
    for k in range(n + 1):
        if k >= 1:
            row[k] += prev[k - 1] if k - 1 <= n - 1 else 0
        if k <= n - 1:
            row[k] -= (n - 1) * prev[k]
    return tuple(row)


def stirling2(n: int, k: int) -> Fraction:
    """Number of partitions of an n-set into k nonempty blocks."""
    _check_indices(n, k)
    return _stirling2_row(n)[k]


def stirling1(n: int, k: int) -> Fraction:
    """Signed Stirling numbers of the first kind: (x)_n = sum S1(n,k) x^k."""
    _check_indices(n, k)
    return _stirling1_row(n)[k]


@lru_cache(maxsize=None)
def _falling_basis(n: int, lam: Fraction = Fraction(1)) -> tuple[Polynomial, ...]:
    return tuple(falling_factorial(k, lam) for k in range(n + 1))


@lru_cache(maxsize=None)
def _central_basis(n: int, lam: Fraction = Fraction(1)) -> tuple[Polynomial, ...]:
    return tuple(central_factorial(k, lam) for k in range(n + 1))


@lru_cache(maxsize=None)
def _stirling2_degenerate_row(n: int, lam: Fraction) -> tuple[Fraction, ...]:
    return tuple(expand_in_basis(falling_factorial(n, lam), _falling_basis(n)))


@lru_cache(maxsize=None)
def _stirling1_degenerate_row(n: int, lam: Fraction) -> tuple[Fraction, ...]:
    return tuple(expand_in_basis(falling_factorial(n), _falling_basis(n, lam)))


def stirling2_degenerate(n: int, k: int, lam: RationalLike) -> Fraction:
    """Expansion of the step-lam falling factorial in classical falling factorials."""
    _check_indices(n, k)
    return _stirling2_degenerate_row(n, rational(lam))[k]


def stirling1_degenerate(n: int, k: int, lam: RationalLike) -> Fraction:
    """Expansion of the classical falling factorial in step-lam falling factorials."""
    _check_indices(n, k)
    return _stirling1_degenerate_row(n, rational(lam))[k]


def stirling1_degenerate_gf(k: int, lam: RationalLike, order: int):
    """Cross-check generating function (1/k!) log_lam(1+t)^k."""
    from .series import degenerate_log1p

    return degenerate_log1p(lam, order) ** k / math.factorial(k)


# -- Lah numbers ---------------------------------------------------------------


def lah(n: int, k: int) -> Fraction:
    """Unsigned Lah numbers C(n-1, k-1) n!/k!."""
    _check_indices(n, k)
    if n == 0:
        return Fraction(1)
    if k == 0:
        return Fraction(0)
    return Fraction(math.comb(n - 1, k - 1) * math.factorial(n), math.factorial(k))


@lru_cache(maxsize=None)
def _lah_degenerate_row(n: int, lam: Fraction) -> tuple[Fraction, ...]:
    return tuple(expand_in_basis(rising_factorial(n, lam), _falling_basis(n)))


def lah_degenerate(n: int, k: int, lam: RationalLike) -> Fraction:
    """Expansion of the step-lam rising factorial in falling factorials."""
    _check_indices(n, k)
    return _lah_degenerate_row(n, rational(lam))[k]


# -- central factorial numbers --------------------------------------------------


@lru_cache(maxsize=None)
def _central_row(n: int, kind: int, lam: Fraction | None, variant: str) -> tuple[Fraction, ...]:
    if variant == "t":
        if lam is None:
            if kind == 1:  # central factorials in monomials
                p = central_factorial(n)
                return tuple(p.coefficient(i) for i in range(n + 1))
            return tuple(expand_in_basis(Polynomial([0] * n + [1]), _central_basis(n)))
        if kind == 1:  # central factorials in step-lam falling factorials
            return tuple(expand_in_basis(central_factorial(n), _falling_basis(n, lam)))
        # step-lam falling factorials in central factorials
        return tuple(expand_in_basis(falling_factorial(n, lam), _central_basis(n)))
    if variant == "r":
        assert lam is not None
        if kind == 1:  # step-lam central factorials in monomials
            p = central_factorial(n, lam)
            return tuple(p.coefficient(i) for i in range(n + 1))
        # monomials in step-lam central factorials
        return tuple(expand_in_basis(Polynomial([0] * n + [1]), _central_basis(n, lam)))
    raise ValueError(f"unknown central-factorial variant {variant!r}")


def central_factorial_numbers(n: int, k: int, kind: int,
                              lam: RationalLike | None = None,
                              variant: str = "t") -> Fraction:
    """Central factorial numbers of either kind.

    With ``lam=None`` these are the classical numbers (kind 1 expands the
    central factorials in monomials, kind 2 inverts). ``variant="t"`` with a
    step keeps the central factorials classical and degenerates the falling
    factorial side; ``variant="r"`` degenerates the central factorials
    themselves against plain monomials. Each kind-1/kind-2 table is the
    inverse triangle of its partner.
    """
    _check_indices(n, k)
    if kind not in (1, 2):
        raise ValueError("kind must be 1 or 2")
    lam_f = None if lam is None else rational(lam)
    if variant == "r" and lam_f is None:
        raise ValueError("variant 'r' requires a step parameter")
    return _central_row(n, kind, lam_f, variant)[k]


# -- Gould-Hopper numbers --------------------------------------------------------


@lru_cache(maxsize=None)
def _gould_hopper_row(n: int, r: Fraction, s: Fraction) -> tuple[Fraction, ...]:
    shifted = falling_factorial(n)(Polynomial([s, r]))
    return tuple(expand_in_basis(shifted, _falling_basis(n)))


def gould_hopper(n: int, k: int, r: RationalLike, s: RationalLike) -> Fraction:
    """Expansion coefficients of (r x + s)_n in falling factorials."""
    _check_indices(n, k)
    r = rational(r)
    if r == 0:
        raise ValueError("gould_hopper requires r != 0")
    return _gould_hopper_row(n, r, rational(s))[k]


def gould_hopper_sum(n: int, k: int, r: RationalLike, s: RationalLike) -> Fraction:
    """Closed-form cross-check: a triple sum over classical Stirling numbers."""
    _check_indices(n, k)
    r = rational(r)
    s = rational(s)
    total = Fraction(0)
    for l in range(k, n + 1):
        for m in range(k, l + 1):
            total += (math.comb(n, l) * r**m * falling_number(s, n - l)
                      * stirling1(l, m) * stirling2(m, k))
    return total


# -- scalar sequences -------------------------------------------------------------


@lru_cache(maxsize=None)
def _bernoulli_values(count: int) -> tuple[Fraction, ...]:
    series = identity(count + 1) / expm1_series(count + 1)
    return tuple(series.egf_coefficient(n) for n in range(count + 1))


def bernoulli_number(n: int) -> Fraction:
    """B_n, from the exponential generating function t/(e^t - 1)."""
    return _bernoulli_values(n)[n]


@lru_cache(maxsize=None)
def _euler_zero_values(count: int) -> tuple[Fraction, ...]:
    series = 2 / (expm1_series(count) + 2)
    return tuple(series.egf_coefficient(n) for n in range(count + 1))


def euler_number(n: int) -> Fraction:
    """E_n(0), from the exponential generating function 2/(e^t + 1)."""
    return _euler_zero_values(n)[n]


@lru_cache(maxsize=None)
def _bernoulli2nd_values(count: int) -> tuple[Fraction, ...]:
    series = identity(count + 1) / log1p_series(count + 1)
    return tuple(series.egf_coefficient(n) for n in range(count + 1))


def bernoulli2nd_number(n: int) -> Fraction:
    """Bernoulli numbers of the second kind, from t/log(1 + t)."""
    return _bernoulli2nd_values(n)[n]


@lru_cache(maxsize=None)
def _bell_values(count: int, a: Fraction) -> tuple[Fraction, ...]:
    return tuple(
        sum((stirling2(n, k) * a**k for k in range(n + 1)), Fraction(0))
        for n in range(count + 1)
    )


def bell_value(n: int, a: RationalLike = 1) -> Fraction:
    """Bell polynomial value sum_k S2(n,k) a^k; a=1 gives the Bell numbers."""
    return _bell_values(n, rational(a))[n]


_SCALAR_BUILDERS = {
    "bernoulli": lambda n, a: tuple(_bernoulli_values(n)),
    "euler": lambda n, a: tuple(_euler_zero_values(n)),
    "bernoulli2nd": lambda n, a: tuple(_bernoulli2nd_values(n)),
    "bell": lambda n, a: tuple(_bell_values(n, rational(1 if a is None else a))),
}


def scalar_sequence(name: str, count: int, a: RationalLike | None = None) -> ScalarSequence:
    """Named scalar sequence through index ``count``."""
    try:
        builder = _SCALAR_BUILDERS[name]
    except KeyError:
        raise ValueError(f"unknown scalar sequence {name!r}") from None
    return ScalarSequence(name, builder(count, a))
