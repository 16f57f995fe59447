"""The umbral-calculus layer: functionals, operators, Sheffer sequences.

A power series f = sum a_k t^k/k! acts on polynomials two ways:

* as a linear functional,  <f | x^k> = a_k, extended linearly;
* as a differential operator,  f(t) x^n = sum_k C(n,k) a_k x^{n-k},
  so that t^k differentiates k times and e^{yt} translates by y.

Both are implemented by exact coefficient pairing (never numeric
evaluation). A Sheffer pair (g, f) with g invertible and f delta
determines the unique sequence s_n with <g f^k | s_n> = n! delta_{n,k};
the generator here extracts s_n from the bivariate generating function
(1/g(fbar)) e^{x fbar(t)}, and an independent construction through the
one-step recurrence s_{n+1} = (x - g'/g) (1/f') s_n is provided as a
cross-check.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Callable, Optional

from .polynomials import ONE, X, Polynomial
from .series import FormalPowerSeries, one

SeriesCtor = Callable[[int], FormalPowerSeries]


def functional(f: FormalPowerSeries, p: Polynomial) -> Fraction:
    """The pairing <f | p>: sum over k of k! * [t^k]f * [x^k]p."""
    deg = len(p.coeffs) - 1
    if f.trunc_order < deg:
        raise ValueError(
            f"insufficient order: functional needs {deg} terms, series has {f.trunc_order}"
        )
    return sum(
        (math.factorial(k) * f.coeffs[k] * c for k, c in enumerate(p.coeffs) if c != 0),
        Fraction(0),
    )


def apply_operator(f: FormalPowerSeries, p: Polynomial) -> Polynomial:
    """The differential operator f(t) applied to p(x)."""
    deg = len(p.coeffs) - 1
    if f.trunc_order < deg:
        raise ValueError(
            f"insufficient order: operator needs {deg} terms, series has {f.trunc_order}"
        )
    out = [Fraction(0)] * (deg + 1 if deg >= 0 else 0)
    for n, pn in enumerate(p.coeffs):
        if pn == 0:
            continue
        for k in range(n + 1):
            a_k = math.factorial(k) * f.coeffs[k]
            if a_k != 0:
                out[n - k] += pn * binom_int(n, k) * a_k
    return Polynomial(out)


def binom_int(n: int, k: int) -> int:
    return math.comb(n, k)


class ShefferPair:
    """A pair (g, f) of series constructors, g invertible and f delta.

    Series are supplied lazily as ``order -> series`` so that every
    consumer can request exactly the truncation it needs. ``g=None``
    stands for the constant series 1 (an associated sequence).
    """

    __slots__ = ("_g", "_f", "_cache_g", "_cache_f")

    def __init__(self, g: Optional[SeriesCtor], f: SeriesCtor):
        self._g = g
        self._f = f
        self._cache_g: dict[int, FormalPowerSeries] = {}
        self._cache_f: dict[int, FormalPowerSeries] = {}
        probe = self.f_series(2)
        if not probe.is_delta:
            raise ValueError("f must be a delta series (order exactly 1)")
        if g is not None and self.g_series(2).coeffs[0] == 0:
            raise ValueError("g must be invertible (nonzero constant term)")

    @property
    def is_associated(self) -> bool:
        return self._g is None

    def g_series(self, order: int) -> FormalPowerSeries:
        if self._g is None:
            return one(order)
        if order not in self._cache_g:
            got = self._g(order)
            if got.trunc_order < order:
                raise ValueError("g constructor returned too short a series")
            self._cache_g[order] = got.truncate(order)
        return self._cache_g[order]

    def f_series(self, order: int) -> FormalPowerSeries:
        if order not in self._cache_f:
            got = self._f(order)
            if got.trunc_order < order:
                raise ValueError("f constructor returned too short a series")
            self._cache_f[order] = got.truncate(order)
        return self._cache_f[order]


def sheffer_polynomials(pair: ShefferPair, count: int) -> list[Polynomial]:
    """s_0..s_count from the generating function (1/g(fbar)) e^{x fbar}.

    s_n is read off as n! times the t^n coefficient of
    (1/g(fbar)) * fbar^j / j!, collected over the x^j monomials.
    """
    if count == 0:
        g0 = Fraction(1) if pair.is_associated else pair.g_series(0).coeffs[0]
        return [Polynomial([1 / g0])]
    n_max = count
    fbar = pair.f_series(n_max).revert()
    if pair.is_associated:
        prefactor = one(n_max)
    else:
        prefactor = one(n_max) / pair.g_series(n_max).compose(fbar)
    columns = []  # columns[j] = prefactor * fbar^j / j!
    term = prefactor
    columns.append(term)
    for j in range(1, n_max + 1):
        term = term * fbar / j
        columns.append(term)
    polys = []
    for n in range(n_max + 1):
        coeffs = [math.factorial(n) * columns[j].coeffs[n] for j in range(n + 1)]
        polys.append(Polynomial(coeffs))
    return polys


def sheffer_polynomials_by_recurrence(pair: ShefferPair, count: int) -> list[Polynomial]:
    """Independent construction through s_{n+1} = (x - g'/g)(1/f') s_n."""
    n_max = count
    # derivatives of trunc-(N+1) series are valid through t^N, enough to act
    # on polynomials of degree <= N
    f = pair.f_series(n_max + 1)
    inv_fprime = one(n_max) / f.derivative()
    ratio = None
    if not pair.is_associated:
        g = pair.g_series(n_max + 1)
        ratio = g.derivative() / g.truncate(n_max)
        s0 = Polynomial([1 / g.coeffs[0]])
    else:
        s0 = ONE
    polys = [s0]
    for n in range(n_max):
        u = apply_operator(inv_fprime, polys[n])
        nxt = X * u
        if ratio is not None:
            nxt = nxt - apply_operator(ratio, u)
        polys.append(nxt)
    return polys


def expand_in_sheffer(p: Polynomial, pair: ShefferPair) -> list[Fraction]:
    """Coefficients c_k with p = sum c_k s_k, via c_k = <g f^k | p>/k!."""
    deg = len(p.coeffs) - 1
    if deg < 0:
        return []
    g = pair.g_series(deg)
    f = pair.f_series(deg)
    out = []
    weight = g
    for k in range(deg + 1):
        out.append(functional(weight, p) / math.factorial(k))
        weight = weight * f
    return out
