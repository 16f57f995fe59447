"""Dense univariate polynomials over exact rationals.

Every coefficient in this package is a ``fractions.Fraction``; no floating
point is used anywhere. Polynomials are stored little-endian (index ``i``
holds the coefficient of ``x**i``) with trailing zeros trimmed, so the zero
polynomial is the empty tuple. Its degree is the sentinel ``NEG_INFINITY``,
never ``-1``.

Besides ring arithmetic this module provides the factorial-type basis
polynomials (falling, rising and central factorials, each with a rational
step parameter) and exact basis conversion, which is the workhorse behind
every number triangle in the package.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Iterable, Sequence, Union

Rational = Fraction
RationalLike = Union[Fraction, int, str]

#: Degree of the zero polynomial.
NEG_INFINITY = float("-inf")


def rational(value: RationalLike) -> Fraction:
    """Coerce an int, a ``p/q`` string, or a Fraction to a Fraction."""
    if isinstance(value, Fraction):
        return value
    return Fraction(value)


def binomial(a: RationalLike, k: int) -> Fraction:
    """Generalized binomial coefficient C(a, k) = a(a-1)...(a-k+1)/k!.

    ``a`` may be any rational (including negative); ``k < 0`` gives 0.
    """
    if k < 0:
        return Fraction(0)
    a = rational(a)
    num = Fraction(1)
    for i in range(k):
        num *= a - i
    return num / math.factorial(k)


def falling_number(a: RationalLike, k: int) -> Fraction:
    """The falling-factorial product a(a-1)...(a-k+1); empty product for k=0."""
    a = rational(a)
    out = Fraction(1)
    for i in range(k):
        out *= a - i
    return out


class Polynomial:
    """Immutable dense polynomial in one variable over Fraction."""

    __slots__ = ("coeffs",)

    coeffs: tuple[Fraction, ...]

    def __init__(self, coeffs: Iterable[RationalLike] = ()):
        cs = [rational(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs = tuple(cs)

    # -- structure ---------------------------------------------------------

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def degree(self):
        """Degree, or NEG_INFINITY for the zero polynomial."""
        return len(self.coeffs) - 1 if self.coeffs else NEG_INFINITY

    @property
    def leading(self) -> Fraction:
        if not self.coeffs:
            return Fraction(0)
        return self.coeffs[-1]

    def coefficient(self, i: int) -> Fraction:
        if 0 <= i < len(self.coeffs):
            return self.coeffs[i]
        return Fraction(0)

    def __eq__(self, other) -> bool:
        if isinstance(other, Polynomial):
            return self.coeffs == other.coeffs
        if isinstance(other, (int, Fraction)):
            return self == Polynomial([other])
        return NotImplemented

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self) -> str:
        return f"Polynomial({list(self.coeffs)!r})"

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        parts = []
        for i, c in enumerate(self.coeffs):
            if c == 0:
                continue
            if i == 0:
                parts.append(str(c))
            elif i == 1:
                parts.append(f"{c}*x" if abs(c) != 1 else ("-x" if c < 0 else "x"))
            else:
                parts.append(f"{c}*x^{i}" if abs(c) != 1 else (f"-x^{i}" if c < 0 else f"x^{i}"))
        out = " + ".join(parts)
        return out.replace("+ -", "- ")

    # -- ring operations ---------------------------------------------------

    def __add__(self, other) -> "Polynomial":
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return Polynomial(out)

    __radd__ = __add__

    def __neg__(self) -> "Polynomial":
        return Polynomial([-c for c in self.coeffs])

    def __sub__(self, other) -> "Polynomial":
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> "Polynomial":
        return -(self - other)

    def __mul__(self, other) -> "Polynomial":
        if isinstance(other, (int, Fraction)):
            return Polynomial([c * other for c in self.coeffs])
        if not isinstance(other, Polynomial):
            return NotImplemented
        if self.is_zero or other.is_zero:
            return ZERO
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return Polynomial(out)

    __rmul__ = __mul__

    def __truediv__(self, scalar) -> "Polynomial":
        scalar = rational(scalar)
        return Polynomial([c / scalar for c in self.coeffs])

    def __pow__(self, n: int) -> "Polynomial":
        if n < 0:
            raise ValueError("negative polynomial power")
        out = ONE
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    # -- evaluation / substitution -----------------------------------------

    def __call__(self, point):
        """Evaluate at a rational point, or substitute a Polynomial."""
        if isinstance(point, Polynomial):
            out = ZERO
            for c in reversed(self.coeffs):
                out = out * point + Polynomial([c])
            return out
        point = rational(point)
        out = Fraction(0)
        for c in reversed(self.coeffs):
            out = out * point + c
        return out

    def scale_argument(self, a: RationalLike) -> "Polynomial":
        """p(a*x)."""
        a = rational(a)
        return Polynomial([c * a**i for i, c in enumerate(self.coeffs)])

    def derivative(self) -> "Polynomial":
        return Polynomial([i * c for i, c in enumerate(self.coeffs)][1:])


def _coerce(value):
    if isinstance(value, Polynomial):
        return value
    if isinstance(value, (int, Fraction)):
        return Polynomial([value])
    return NotImplemented


ZERO = Polynomial()
ONE = Polynomial([1])
X = Polynomial([0, 1])


def constant(c: RationalLike) -> Polynomial:
    return Polynomial([c])


def falling_factorial(n: int, step: RationalLike = 1) -> Polynomial:
    """x(x-s)(x-2s)...(x-(n-1)s); the classical falling factorial at s=1.

    Step 0 degenerates to x**n; n=0 gives 1.
    """
    if n < 0:
        raise ValueError("n must be nonnegative")
    step = rational(step)
    out = ONE
    for j in range(n):
        out = out * Polynomial([-j * step, 1])
    return out


def rising_factorial(n: int, step: RationalLike = 1) -> Polynomial:
    """x(x+s)(x+2s)...(x+(n-1)s)."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    step = rational(step)
    out = ONE
    for j in range(n):
        out = out * Polynomial([j * step, 1])
    return out


def central_factorial(n: int, step: RationalLike = 1) -> Polynomial:
    """x(x + (n/2 - 1)s)(x + (n/2 - 2)s)...(x - (n/2 - 1)s).

    These are the central factorials x(x + (n/2-1)s)_{n-1,s}: the degree-n
    analogue of the falling factorial whose roots sit symmetrically around
    the origin. n=0 gives 1; s=0 degenerates to x**n.
    """
    if n < 0:
        raise ValueError("n must be nonnegative")
    step = rational(step)
    out = ONE if n == 0 else X
    top = Fraction(n, 2) - 1
    for j in range(n - 1):
        out = out * Polynomial([(top - j) * step, 1])
    return out


def expand_in_basis(p: Polynomial, basis: Sequence[Polynomial]) -> list[Fraction]:
    """Coefficients c with p = sum_k c_k * basis[k].

    The basis must be graded, deg basis[k] = k, and long enough to cover
    deg p. Solved by back substitution; exact.
    """
    for k, b in enumerate(basis):
        if b.degree != k:
            raise ValueError(f"basis element {k} has degree {b.degree}, expected {k}")
    if not p.is_zero and p.degree >= len(basis):
        raise ValueError("basis too short for polynomial degree")
    out = [Fraction(0)] * len(basis)
    rem = p
    for k in reversed(range(len(basis))):
        c = rem.coefficient(k) / basis[k].coeffs[k]
        if c != 0:
            out[k] = c
            rem = rem - c * basis[k]
    if not rem.is_zero:
        raise ArithmeticError("basis conversion left a nonzero remainder")
    return out


def solve_linear_system(rows: Sequence[Sequence[RationalLike]],
                        rhs: Sequence[RationalLike]) -> list[Fraction]:
    """Solve a square linear system exactly by Gaussian elimination."""
    n = len(rows)
    m = [[rational(v) for v in row] + [rational(b)] for row, b in zip(rows, rhs)]
    if any(len(row) != n + 1 for row in m):
        raise ValueError("system is not square")
    for col in range(n):
        pivot = next((r for r in range(col, n) if m[r][col] != 0), None)
        if pivot is None:
            raise ArithmeticError("singular system")
        m[col], m[pivot] = m[pivot], m[col]
        inv = 1 / m[col][col]
        m[col] = [v * inv for v in m[col]]
        for r in range(n):
            if r != col and m[r][col] != 0:
                factor = m[r][col]
                m[r] = [v - factor * w for v, w in zip(m[r], m[col])]
    return [m[r][n] for r in range(n)]
