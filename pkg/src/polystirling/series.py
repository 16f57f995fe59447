"""Truncated formal power series over exact rationals.

A series stores ordinary coefficients of t^0 .. t^N for an explicit
truncation order N (``len(coeffs) == trunc_order + 1``). Every operation
returns a result truncated to the largest order its coefficients are
actually valid for: mixing two series takes the minimum of the operand
orders, and division by a series of order m costs m orders. Nothing is
silently padded with fabricated zeros.

The compositional machinery (composition, reversion, exp/log, rational
powers) is what the umbral layer is built on. All of it is exact.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Iterable, Optional

from .polynomials import RationalLike, binomial, rational


class FormalPowerSeries:
    """Immutable truncated power series with Fraction coefficients."""

    __slots__ = ("coeffs",)

    coeffs: tuple[Fraction, ...]

    def __init__(self, coeffs: Iterable[RationalLike]):
        self.coeffs = tuple(rational(c) for c in coeffs)
        if not self.coeffs:
            raise ValueError("a series needs at least its constant term")

    # -- structure ---------------------------------------------------------

    @property
    def trunc_order(self) -> int:
        return len(self.coeffs) - 1

    @property
    def order(self) -> Optional[int]:
        """Index of the first nonzero stored coefficient; None if all zero."""
        for i, c in enumerate(self.coeffs):
            if c != 0:
                return i
        return None

    def coefficient(self, n: int) -> Fraction:
        if n < 0 or n > self.trunc_order:
            raise IndexError(f"coefficient {n} beyond truncation order {self.trunc_order}")
        return self.coeffs[n]

    def egf_coefficient(self, n: int) -> Fraction:
        """n! times the coefficient of t^n (exponential convention)."""
        return math.factorial(n) * self.coefficient(n)

    @property
    def is_delta(self) -> bool:
        """Zero constant term and nonzero linear term."""
        return self.trunc_order >= 1 and self.coeffs[0] == 0 and self.coeffs[1] != 0

    def truncate(self, order: int) -> "FormalPowerSeries":
        if order > self.trunc_order:
            raise ValueError("cannot extend a truncation")
        return FormalPowerSeries(self.coeffs[: order + 1])

    def agrees(self, other: "FormalPowerSeries") -> bool:
        """Equality through the common truncation order."""
        n = min(self.trunc_order, other.trunc_order)
        return self.coeffs[: n + 1] == other.coeffs[: n + 1]

    def __eq__(self, other) -> bool:
        if isinstance(other, FormalPowerSeries):
            return self.coeffs == other.coeffs
        return NotImplemented

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self) -> str:
        return f"FormalPowerSeries({list(self.coeffs)!r})"

    # -- ring operations ----------------------------------------------------

    def __add__(self, other) -> "FormalPowerSeries":
        if isinstance(other, (int, Fraction)):
            out = list(self.coeffs)
            out[0] += other
            return FormalPowerSeries(out)
        n = min(self.trunc_order, other.trunc_order)
        return FormalPowerSeries([self.coeffs[i] + other.coeffs[i] for i in range(n + 1)])

    __radd__ = __add__

    def __neg__(self) -> "FormalPowerSeries":
        return FormalPowerSeries([-c for c in self.coeffs])

    def __sub__(self, other) -> "FormalPowerSeries":
        if isinstance(other, (int, Fraction)):
            return self + (-other)
        return self + (-other)

    def __rsub__(self, other) -> "FormalPowerSeries":
        return (-self) + other

    def __mul__(self, other) -> "FormalPowerSeries":
        if isinstance(other, (int, Fraction)):
            return FormalPowerSeries([c * other for c in self.coeffs])
        n = min(self.trunc_order, other.trunc_order)
        out = [Fraction(0)] * (n + 1)
        for i, a in enumerate(self.coeffs[: n + 1]):
            if a == 0:
                continue
            for j in range(n + 1 - i):
                b = other.coeffs[j]
                if b != 0:
                    out[i + j] += a * b
        return FormalPowerSeries(out)

    __rmul__ = __mul__

    def __truediv__(self, other) -> "FormalPowerSeries":
        if isinstance(other, (int, Fraction)):
            other = rational(other)
            return FormalPowerSeries([c / other for c in self.coeffs])
        m = other.order
        if m is None:
            raise ZeroDivisionError("division by a zero series")
        if m > 0:
            so = self.order
            if so is not None and so < m:
                raise ValueError("order underflow: numerator order below denominator order")
            # cancel t^m from both sides; the quotient loses m valid orders
            num = self.coeffs[m:]
            den = other.coeffs[m:]
        else:
            num = self.coeffs
            den = other.coeffs
        n = min(len(num), len(den)) - 1
        if n < 0:
            raise ValueError("order underflow: no valid coefficients remain")
        inv0 = 1 / den[0]
        out = [Fraction(0)] * (n + 1)
        for i in range(n + 1):
            acc = num[i] if i < len(num) else Fraction(0)
            for j in range(1, i + 1):
                if den[j] != 0:
                    acc -= den[j] * out[i - j]
            out[i] = acc * inv0
        return FormalPowerSeries(out)

    def __rtruediv__(self, other) -> "FormalPowerSeries":
        if isinstance(other, (int, Fraction)):
            return FormalPowerSeries([other] + [0] * self.trunc_order) / self
        return NotImplemented

    def __pow__(self, n: int) -> "FormalPowerSeries":
        if n < 0:
            raise ValueError("negative series power; divide instead")
        out = one(self.trunc_order)
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    # -- calculus ------------------------------------------------------------

    def derivative(self) -> "FormalPowerSeries":
        """Formal derivative; valid one order lower than the input."""
        if self.trunc_order == 0:
            raise ValueError("derivative of an order-0 truncation has no valid terms")
        return FormalPowerSeries([i * c for i, c in enumerate(self.coeffs)][1:])

    def scale_argument(self, a: RationalLike) -> "FormalPowerSeries":
        """f(a*t)."""
        a = rational(a)
        return FormalPowerSeries([c * a**i for i, c in enumerate(self.coeffs)])

    # -- composition ---------------------------------------------------------

    def compose(self, inner: "FormalPowerSeries") -> "FormalPowerSeries":
        """self(inner(t)); inner must have zero constant term."""
        if inner.coeffs[0] != 0:
            raise ValueError("inner not delta: nonzero constant term")
        n = min(self.trunc_order, inner.trunc_order)
        inner_n = inner.truncate(n) if inner.trunc_order > n else inner
        out = zero(n)
        for c in reversed(self.coeffs[: n + 1]):
            out = out * inner_n + c
        return out

    def revert(self) -> "FormalPowerSeries":
        """Compositional inverse of a delta series, to the same truncation.

        Newton iteration on the composition residual, doubling the number of
        correct coefficients each step: g <- g - (f(g) - t)/f'(g).
        """
        if not self.is_delta:
            raise ValueError("reversion requires a delta series (order exactly 1)")
        n = self.trunc_order
        tser = identity(n)
        g = FormalPowerSeries([0, 1 / self.coeffs[1]] + [0] * (n - 1))
        fprime = self.derivative() if n >= 1 else None
        for _ in range(n.bit_length() + 2):
            residual = self.compose(g) - tser
            if residual.order is None:
                return g
            denom = fprime.compose(g)
            # f' is valid one order short of f; the missing top coefficient of
            # f'(g) only ever multiplies the residual's constant term, which is
            # identically zero, so padding one zero keeps the quotient exact.
            denom = FormalPowerSeries(denom.coeffs + (0,) * (n - denom.trunc_order))
            g = g - residual / denom
        raise ArithmeticError("reversion did not converge")  # pragma: no cover

    # -- transcendental maps ---------------------------------------------------

    def exp(self) -> "FormalPowerSeries":
        """Series exponential; requires zero constant term."""
        if self.coeffs[0] != 0:
            raise ValueError("exp requires a series of order >= 1")
        n = self.trunc_order
        out = one(n)
        term = one(n)
        for k in range(1, n + 1):
            term = term * self / k
            out = out + term
        return out

    def log(self) -> "FormalPowerSeries":
        """Series logarithm; requires constant term 1."""
        if self.coeffs[0] != 1:
            raise ValueError("log requires constant term 1")
        n = self.trunc_order
        u = self - 1
        out = zero(n)
        term = one(n)
        for k in range(1, n + 1):
            term = term * u
            out = out + term * Fraction((-1) ** (k - 1), k)
        return out

    def rational_power(self, e: RationalLike) -> "FormalPowerSeries":
        """(1 + u)^e by the binomial series; requires constant term 1."""
        if self.coeffs[0] != 1:
            raise ValueError("rational power requires constant term 1")
        e = rational(e)
        n = self.trunc_order
        u = self - 1
        out = one(n)
        term = one(n)
        for k in range(1, n + 1):
            term = term * u
            c = binomial(e, k)
            if c != 0:
                out = out + term * c
        return out


# -- constructors -------------------------------------------------------------


def fps(coeffs: Iterable[RationalLike], order: Optional[int] = None) -> FormalPowerSeries:
    """Series from explicit coefficients, zero-extended to ``order``.

    Only use the extension for series known exactly (polynomials in t).
    """
    cs = [rational(c) for c in coeffs]
    if order is not None:
        if len(cs) > order + 1:
            cs = cs[: order + 1]
        cs += [Fraction(0)] * (order + 1 - len(cs))
    return FormalPowerSeries(cs)


def zero(order: int) -> FormalPowerSeries:
    return fps([], order)


def one(order: int) -> FormalPowerSeries:
    return fps([1], order)


def identity(order: int) -> FormalPowerSeries:
    """The series t."""
    return fps([0, 1], order)


def exp_series(order: int) -> FormalPowerSeries:
    """e^t."""
    return FormalPowerSeries([Fraction(1, math.factorial(k)) for k in range(order + 1)])


def expm1_series(order: int) -> FormalPowerSeries:
    """e^t - 1."""
    return exp_series(order) - 1


def exp_scaled(y: RationalLike, order: int) -> FormalPowerSeries:
    """e^{y t}."""
    return exp_series(order).scale_argument(y)


def log1p_series(order: int) -> FormalPowerSeries:
    """log(1 + t)."""
    return FormalPowerSeries([0] + [Fraction((-1) ** (k - 1), k) for k in range(1, order + 1)])


def scaled_expm1(lam: RationalLike, order: int) -> FormalPowerSeries:
    """(e^{s t} - 1)/s, degenerating to t at s = 0."""
    lam = rational(lam)
    if lam == 0:
        return identity(order)
    return FormalPowerSeries(
        [0] + [lam ** (k - 1) / math.factorial(k) for k in range(1, order + 1)]
    )


def degenerate_exp(lam: RationalLike, order: int) -> FormalPowerSeries:
    """(1 + s t)^{1/s}, degenerating to e^t at s = 0."""
    lam = rational(lam)
    if lam == 0:
        return exp_series(order)
    return fps([1, lam], order).rational_power(1 / lam)


def degenerate_log_of(series: FormalPowerSeries, lam: RationalLike) -> FormalPowerSeries:
    """(u^s - 1)/s for a series u with constant term 1; log(u) at s = 0."""
    lam = rational(lam)
    if lam == 0:
        return series.log()
    return (series.rational_power(lam) - 1) / lam


def degenerate_log1p(lam: RationalLike, order: int) -> FormalPowerSeries:
    """((1 + t)^s - 1)/s, degenerating to log(1 + t) at s = 0."""
    return degenerate_log_of(fps([1, 1], order), lam)
