"""The named polynomial families and their closed-form oracles.

Each family packages a generator for its polynomials p_n (deg p_n = n,
p_0 = 1), an optional Sheffer pair, and optional closed forms for the
Stirling numbers of both kinds associated with the family. The closed
forms are verification oracles: the generic basis-conversion routes in
:mod:`polystirling.associated` never consult them.

Registered ids (parameters in parentheses):

    monomial            x^n
    falling_deg(lam)    generalized falling factorials
    rising              rising factorials
    rising_deg(lam)     generalized rising factorials
    central             central factorials
    central_bell        central Bell polynomials
    central_bell_deg(lam)  degenerate central Bell polynomials
    central_deg(lam)    generalized central factorials
    lah_bell            Lah-Bell polynomials
    lah_bell_deg(lam)   degenerate Lah-Bell polynomials
    bell                Bell polynomials
    bell_partial_deg(lam)  partially degenerate Bell polynomials
    bell_full_deg(lam)  fully degenerate Bell polynomials
    mittag_leffler      Mittag-Leffler polynomials
    laguerre_m1         Laguerre polynomials of order -1
    bernoulli           Bernoulli polynomials
    euler               Euler polynomials
    gould_hopper(r, s)  shifted-rescaled falling factorials (r x + s)_n
    bernoulli2nd        Bernoulli polynomials of the second kind
    poisson_charlier(a) Poisson-Charlier polynomials
    bernoulli_product   convolution sum of Bernoulli polynomials (not Sheffer)
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Callable, Optional

from .polynomials import (
    ONE,
    Polynomial,
    RationalLike,
    X,
    central_factorial,
    falling_factorial,
    falling_number,
    rational,
    rising_factorial,
)
from .series import (
    FormalPowerSeries,
    degenerate_log1p,
    degenerate_log_of,
    exp_scaled,
    expm1_series,
    fps,
    identity,
    log1p_series,
    one,
    scaled_expm1,
)
from .triangles import (
    bell_value,
    bernoulli_number,
    bernoulli2nd_number,
    central_factorial_numbers,
    euler_number,
    lah,
    lah_degenerate,
    stirling1,
    stirling1_degenerate,
    stirling2,
    stirling2_degenerate,
)
from .umbral import ShefferPair, sheffer_polynomials


class UnsupportedFamilyError(ValueError):
    """A family lacks the structure an operation requires."""


OracleFn = Callable[[int, int], Fraction]


@dataclass(frozen=True)
class PolynomialFamily:
    """A polynomial sequence with optional Sheffer structure and oracles.

    Equality and hashing use (id, params) only, so families act as cache
    keys; the callables are implementation detail.
    """

    id: str
    params: tuple[tuple[str, Fraction], ...]
    poly_fn: Callable[[int], Polynomial] = field(compare=False, repr=False)
    sheffer: Optional[ShefferPair] = field(default=None, compare=False, repr=False)
    s2_closed_form: Optional[OracleFn] = field(default=None, compare=False, repr=False)
    s1_closed_form: Optional[OracleFn] = field(default=None, compare=False, repr=False)

    def poly(self, n: int) -> Polynomial:
        """The degree-n member of the family."""
        if n < 0:
            raise ValueError("n must be nonnegative")
        return self.poly_fn(n)

    def coefficient(self, n: int, l: int) -> Fraction:
        """Monomial coefficient p_{n,l}."""
        return self.poly(n).coefficient(l)

    def param(self, name: str) -> Fraction:
        for key, value in self.params:
            if key == name:
                return value
        raise KeyError(name)

    @property
    def label(self) -> str:
        if not self.params:
            return self.id
        inner = ",".join(f"{k}={v}" for k, v in self.params)
        return f"{self.id}({inner})"

    def vanishes_at_zero(self, n_max: int) -> bool:
        """Whether p_n(0) = 0 for 1 <= n <= n_max."""
        return all(self.poly(n).coefficient(0) == 0 for n in range(1, n_max + 1))


def _central_arg(order: int, scale: Fraction = Fraction(1)) -> FormalPowerSeries:
    # (s*t + sqrt(s^2 t^2 + 4))/2, with the square root always taken through
    # the unit-constant rewrite sqrt(s^2 t^2 + 4) = 2 (1 + s^2 t^2/4)^(1/2)
    root = fps([1, 0, scale * scale / 4], order).rational_power(Fraction(1, 2))
    return root + identity(order) * (scale / 2)


def _symmetric_expm1(lam: Fraction, order: int) -> FormalPowerSeries:
    # (e^{s t/2} - e^{-s t/2})/s, degenerating to t at s = 0
    half = lam / 2
    return (scaled_expm1(half, order) + scaled_expm1(-half, order)) / 2


# -- oracle helpers --------------------------------------------------------------


def _convolve(outer: Callable[[int, int], Fraction], inner: Callable[[int, int], Fraction]):
    def oracle(n: int, k: int) -> Fraction:
        return sum((outer(n, l) * inner(l, k) for l in range(k, n + 1)), Fraction(0))

    return oracle


def _bernoulli_weighted_s2(n: int, k: int) -> Fraction:
    return sum(
        (stirling2(l, k) * math.comb(n, l) * bernoulli_number(n - l) for l in range(k, n + 1)),
        Fraction(0),
    )


def _builders() -> dict[str, Callable[[dict[str, Fraction]], dict]]:
    def monomial(_):
        return dict(
            poly=lambda n: Polynomial([0] * n + [1]),
            pair=ShefferPair(None, identity),
            s2=lambda n, k: stirling2(n, k),
            s1=lambda n, k: stirling1(n, k),
        )

    def falling_deg(p):
        lam = p["lam"]
        return dict(
            poly=lambda n: falling_factorial(n, lam),
            pair=ShefferPair(None, lambda N: scaled_expm1(lam, N)),
            s2=lambda n, k: stirling2_degenerate(n, k, lam),
            s1=lambda n, k: stirling1_degenerate(n, k, lam),
        )

    def rising(_):
        return dict(
            poly=lambda n: rising_factorial(n),
            pair=ShefferPair(None, lambda N: scaled_expm1(-1, N)),
            s2=lambda n, k: lah(n, k),
            s1=lambda n, k: (-1) ** (n - k) * lah(n, k),
        )

    def rising_deg(p):
        lam = p["lam"]
        if lam == 0:
            s1_oracle = stirling1
        else:
            def s1_oracle(n, k):
                return (-lam) ** (n - k) * lah_degenerate(n, k, 1 / lam)
        return dict(
            poly=lambda n: rising_factorial(n, lam),
            pair=ShefferPair(None, lambda N: scaled_expm1(-lam, N)),
            s2=lambda n, k: lah_degenerate(n, k, lam),
            s1=s1_oracle,
        )

    def central(_):
        return dict(
            poly=lambda n: central_factorial(n),
            pair=ShefferPair(None, lambda N: _symmetric_expm1(Fraction(1), N)),
            s2=_convolve(lambda n, l: central_factorial_numbers(n, l, 1), stirling2),
            s1=_convolve(stirling1, lambda l, k: central_factorial_numbers(l, k, 2)),
        )

    def central_deg(p):
        lam = p["lam"]
        return dict(
            poly=lambda n: central_factorial(n, lam),
            pair=ShefferPair(None, lambda N: _symmetric_expm1(lam, N)),
            s2=_convolve(lambda n, l: central_factorial_numbers(n, l, 1, lam, "r"), stirling2),
            s1=_convolve(stirling1, lambda l, k: central_factorial_numbers(l, k, 2, lam, "r")),
        )

    def central_bell(_):
        return dict(
            poly=lambda n: Polynomial(
                [central_factorial_numbers(n, k, 2) for k in range(n + 1)]
            ),
            pair=ShefferPair(None, lambda N: degenerate_log_of(_central_arg(N) ** 2, 0)),
            s2=_convolve(lambda n, l: central_factorial_numbers(n, l, 2), stirling2),
            s1=_convolve(stirling1, lambda l, k: central_factorial_numbers(l, k, 1)),
        )

    def central_bell_deg(p):
        lam = p["lam"]
        return dict(
            poly=lambda n: Polynomial(
                [central_factorial_numbers(n, k, 2, lam, "t") for k in range(n + 1)]
            ),
            pair=ShefferPair(None, lambda N: degenerate_log_of(_central_arg(N) ** 2, lam)),
            s2=_convolve(lambda n, l: central_factorial_numbers(n, l, 2, lam, "t"), stirling2),
            s1=_convolve(stirling1, lambda l, k: central_factorial_numbers(l, k, 1, lam, "t")),
        )

    def lah_bell(_):
        return dict(
            poly=lambda n: Polynomial([lah(n, k) for k in range(n + 1)]),
            pair=ShefferPair(None, lambda N: identity(N) / fps([1, 1], N)),
            s2=_convolve(lah, stirling2),
            s1=lambda n, k: sum(
                ((-1) ** (l - k) * stirling1(n, l) * lah(l, k) for l in range(k, n + 1)),
                Fraction(0),
            ),
        )

    def lah_bell_deg(p):
        lam = p["lam"]
        def f_ctor(N):
            u = scaled_expm1(lam, N)
            return u / (one(N) + u)
        return dict(
            poly=lambda n: sum(
                (lah(n, k) * falling_factorial(k, lam) for k in range(n + 1)), Polynomial()
            ),
            pair=ShefferPair(None, f_ctor),
            s2=_convolve(lah, lambda m, k: lah_degenerate(m, k, -lam)),
            s1=lambda n, k: sum(
                ((-1) ** (l - k) * stirling1_degenerate(n, l, lam) * lah(l, k)
                 for l in range(k, n + 1)),
                Fraction(0),
            ),
        )

    def bell(_):
        return dict(
            poly=lambda n: Polynomial([stirling2(n, k) for k in range(n + 1)]),
            pair=ShefferPair(None, log1p_series),
            s2=_convolve(stirling2, stirling2),
            s1=_convolve(stirling1, stirling1),
        )

    def bell_partial_deg(p):
        lam = p["lam"]
        return dict(
            poly=lambda n: Polynomial(
                [stirling2_degenerate(n, k, lam) for k in range(n + 1)]
            ),
            pair=ShefferPair(None, lambda N: degenerate_log1p(lam, N)),
            s2=_convolve(lambda n, l: stirling2_degenerate(n, l, lam), stirling2),
            s1=_convolve(stirling1, lambda l, k: stirling1_degenerate(l, k, lam)),
        )

    def bell_full_deg(p):
        lam = p["lam"]
        return dict(
            poly=lambda n: sum(
                (stirling2_degenerate(n, k, lam) * falling_factorial(k, lam)
                 for k in range(n + 1)),
                Polynomial(),
            ),
            pair=ShefferPair(
                None, lambda N: degenerate_log_of(one(N) + scaled_expm1(lam, N), lam)
            ),
            s2=_convolve(
                lambda n, m: stirling2_degenerate(n, m, lam),
                lambda m, k: lah_degenerate(m, k, -lam),
            ),
            s1=_convolve(
                lambda n, l: stirling1_degenerate(n, l, lam),
                lambda l, k: stirling1_degenerate(l, k, lam),
            ),
        )

    def mittag_leffler(_):
        pair = ShefferPair(None, lambda N: expm1_series(N) / (expm1_series(N) + 2))
        return dict(
            poly=None,
            pair=pair,
            s2=lambda n, k: Fraction(2) ** k * lah(n, k),
            s1=lambda n, k: Fraction((-1) ** (n - k), 2**n) * lah(n, k),
        )

    def laguerre_m1(_):
        pair = ShefferPair(None, lambda N: identity(N) / fps([-1, 1], N))
        return dict(
            poly=None,
            pair=pair,
            s2=lambda n, k: sum(
                ((-1) ** l * lah(n, l) * stirling2(l, k) for l in range(k, n + 1)),
                Fraction(0),
            ),
            s1=lambda n, k: (-1) ** k * sum(
                (stirling1(n, l) * lah(l, k) for l in range(k, n + 1)), Fraction(0)
            ),
        )

    def bernoulli(_):
        return dict(
            poly=lambda n: Polynomial(
                [math.comb(n, k) * bernoulli_number(n - k) for k in range(n + 1)]
            ),
            pair=ShefferPair(lambda N: expm1_series(N + 1) / identity(N + 1), identity),
            s2=_bernoulli_weighted_s2,
            s1=lambda n, k: sum(
                (stirling1(n, l) * falling_number(l + 1, k) / (l + 1)
                 for l in range(k, n + 1)),
                Fraction(0),
            ) / math.factorial(k),
        )

    def euler(_):
        return dict(
            poly=None,
            pair=ShefferPair(lambda N: (expm1_series(N) + 2) / 2, identity),
            s2=lambda n, k: sum(
                (math.comb(n, l) * stirling2(n - l, k) * euler_number(l)
                 for l in range(0, n - k + 1)),
                Fraction(0),
            ),
            s1=lambda n, k: sum(
                (stirling1(n, l) * falling_number(l, k) for l in range(k, n + 1)),
                Fraction(0),
            ) / (2 * math.factorial(k)) + Fraction(stirling1(n, k), 2),
        )

    def gould_hopper(p):
        r, s = p["r"], p["s"]
        if r == 0:
            raise ValueError("gould_hopper requires r != 0")
        from .triangles import gould_hopper as gh_numbers

        return dict(
            poly=lambda n: falling_factorial(n)(Polynomial([s, r])),
            pair=ShefferPair(
                lambda N: exp_scaled(-s / r, N),
                lambda N: exp_scaled(1 / r, N) - 1,
            ),
            s2=lambda n, k: gh_numbers(n, k, r, s),
            s1=lambda n, k: sum(
                ((-s) ** (l - i) / r**l * math.comb(l, i) * stirling1(n, l) * stirling2(i, k)
                 for l in range(k, n + 1) for i in range(k, l + 1)),
                Fraction(0),
            ),
        )

    def bernoulli2nd(_):
        return dict(
            poly=None,
            pair=ShefferPair(lambda N: identity(N + 1) / expm1_series(N + 1), expm1_series),
            s2=lambda n, k: math.comb(n, k) * bernoulli2nd_number(n - k),
            s1=lambda n, k: math.comb(n, k) * sum(
                (stirling1(n - k, l) * bernoulli_number(l) for l in range(n - k + 1)),
                Fraction(0),
            ),
        )

    def poisson_charlier(p):
        a = p["a"]
        if a == 0:
            raise ValueError("poisson_charlier requires a != 0")
        return dict(
            poly=None,
            pair=ShefferPair(
                lambda N: (expm1_series(N) * a).exp(),
                lambda N: expm1_series(N) * a,
            ),
            s2=lambda n, k: math.comb(n, k) * Fraction((-1) ** (n - k)) * a**-k,
            s1=lambda n, k: a**k * math.comb(n, k) * sum(
                (stirling1(n - k, l) * bell_value(l, a) for l in range(n - k + 1)),
                Fraction(0),
            ),
        )

    def bernoulli_product(_):
        bern = family("bernoulli")

        def poly(n):
            return sum(
                (bern.poly(k) * bern.poly(n - k) for k in range(n + 1)), Polynomial()
            )

        def s2(n, k):
            # reduction of the product to a Bernoulli-weighted sum
            total = (n + 1) * _bernoulli_weighted_s2(n, k)
            for m in range(n - 1):
                inner = sum(
                    (math.comb(m, l) * stirling2(m - l, k) * bernoulli_number(l)
                     for l in range(0, m - k + 1)),
                    Fraction(0),
                )
                total += Fraction(2, n + 2) * math.comb(n + 2, m) * bernoulli_number(n - m) * inner
            return total

        return dict(poly=poly, pair=None, s2=s2, s1=_bernoulli_product_s1)

    return {
        "monomial": monomial,
        "falling_deg": falling_deg,
        "rising": rising,
        "rising_deg": rising_deg,
        "central": central,
        "central_bell": central_bell,
        "central_bell_deg": central_bell_deg,
        "central_deg": central_deg,
        "lah_bell": lah_bell,
        "lah_bell_deg": lah_bell_deg,
        "bell": bell,
        "bell_partial_deg": bell_partial_deg,
        "bell_full_deg": bell_full_deg,
        "mittag_leffler": mittag_leffler,
        "laguerre_m1": laguerre_m1,
        "bernoulli": bernoulli,
        "euler": euler,
        "gould_hopper": gould_hopper,
        "bernoulli2nd": bernoulli2nd,
        "poisson_charlier": poisson_charlier,
        "bernoulli_product": bernoulli_product,
    }


def _bernoulli_product_s1(n: int, k: int) -> Fraction:
    # back substitution on the upper-triangular system produced by rewriting
    # the product family in the Bernoulli basis; diagonal entries are m+1
    row = _bernoulli_product_s1_row(n)
    return row[k]


@lru_cache(maxsize=None)
def _bernoulli_product_s1_row(n: int) -> tuple[Fraction, ...]:
    def gamma(m: int) -> Fraction:
        return sum(
            (stirling1(n, l) * falling_number(l + 1, m) / (l + 1) for l in range(m, n + 1)),
            Fraction(0),
        ) / math.factorial(m)

    def eps(m: int, k: int) -> Fraction:
        return Fraction(2, k + 2) * math.comb(k + 2, m) * bernoulli_number(k - m)

    sol = [Fraction(0)] * (n + 1)
    for m in range(n, -1, -1):
        acc = gamma(m)
        for k in range(m + 2, n + 1):
            acc -= eps(m, k) * sol[k]
        sol[m] = acc / (m + 1)
    return tuple(sol)


_PARAM_REQUIREMENTS = {
    "falling_deg": ("lam",),
    "rising_deg": ("lam",),
    "central_bell_deg": ("lam",),
    "central_deg": ("lam",),
    "lah_bell_deg": ("lam",),
    "bell_partial_deg": ("lam",),
    "bell_full_deg": ("lam",),
    "gould_hopper": ("r", "s"),
    "poisson_charlier": ("a",),
}

FAMILY_IDS: tuple[str, ...] = tuple(_builders().keys())


@lru_cache(maxsize=None)
def family(fam_id: str, lam: RationalLike | None = None, r: RationalLike | None = None,
           s: RationalLike | None = None, a: RationalLike | None = None) -> PolynomialFamily:
    """Construct (and cache) a fully wired polynomial family."""
    builders = _builders()
    if fam_id not in builders:
        raise ValueError(f"unknown family {fam_id!r}; known ids: {', '.join(FAMILY_IDS)}")
    supplied = {name: rational(value)
                for name, value in (("lam", lam), ("r", r), ("s", s), ("a", a))
                if value is not None}
    required = _PARAM_REQUIREMENTS.get(fam_id, ())
    missing = [name for name in required if name not in supplied]
    if missing:
        raise ValueError(f"family {fam_id!r} requires parameter(s): {', '.join(missing)}")
    extra = [name for name in supplied if name not in required]
    if extra:
        raise ValueError(f"family {fam_id!r} does not take parameter(s): {', '.join(extra)}")

    pieces = builders[fam_id](supplied)
    pair = pieces["pair"]
    poly = pieces["poly"]
    if poly is None:
        # family defined only through its Sheffer pair
        def poly(n, _pair=pair):
            return sheffer_polynomials(_pair, n)[n]

    return PolynomialFamily(
        id=fam_id,
        params=tuple(sorted(supplied.items())),
        poly_fn=lru_cache(maxsize=None)(poly),
        sheffer=pair,
        s2_closed_form=pieces.get("s2"),
        s1_closed_form=pieces.get("s1"),
    )


def oracle_check(fam: PolynomialFamily, max_n: int):
    """Compare the family's closed forms against the generic computations."""
    from .associated import s1_assoc, s2_assoc  # deferred: associated imports this module
    from .reports import Report, run_check, skipped_check

    def cases(oracle, generic):
        for n in range(max_n + 1):
            for k in range(n + 1):
                yield {"n": n, "k": k, "family": fam.label}, oracle(n, k), generic(fam, n, k)

    checks = []
    if fam.s2_closed_form is None:
        checks.append(skipped_check("closed-form-second-kind", f"n<={max_n}", "no closed form"))
    else:
        checks.append(
            run_check("closed-form-second-kind", f"n<={max_n}", cases(fam.s2_closed_form, s2_assoc))
        )
    if fam.s1_closed_form is None:
        checks.append(skipped_check("closed-form-first-kind", f"n<={max_n}", "no closed form"))
    else:
        checks.append(
            run_check("closed-form-first-kind", f"n<={max_n}", cases(fam.s1_closed_form, s1_assoc))
        )
    return Report("closedforms", fam.label, tuple(checks))


def default_instances(lam_values=(Fraction(1, 2), Fraction(-1, 3), Fraction(2)),
                      gh_params=(Fraction(2), Fraction(3)),
                      a_value=Fraction(1)) -> list[PolynomialFamily]:
    """One instance per family id, fanning parametric ids over the samples."""
    out = []
    for fam_id in FAMILY_IDS:
        required = _PARAM_REQUIREMENTS.get(fam_id, ())
        if required == ("lam",):
            out.extend(family(fam_id, lam=v) for v in lam_values)
        elif fam_id == "gould_hopper":
            out.append(family(fam_id, r=gh_params[0], s=gh_params[1]))
        elif fam_id == "poisson_charlier":
            out.append(family(fam_id, a=a_value))
        else:
            out.append(family(fam_id))
    return out
