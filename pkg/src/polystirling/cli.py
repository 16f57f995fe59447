"""Command-line surface: exact triangles, identity suites, GF coefficients.

Three subcommands:

* ``triangle`` emits a family-associated or classical number triangle as
  csv, json, or an aligned ascii table;
* ``verify`` runs an identity suite and prints a JSON report;
* ``gf`` dumps generating-function coefficients (t^n/n! convention).

Rationals are always serialized as ``p/q`` strings (``p`` when q = 1).
Exit codes: 0 all good, 1 at least one identity failed, 2 usage error.
"""

from __future__ import annotations

import csv
import io
import json
import sys
from fractions import Fraction

import click

from . import associated, eulerian
from .families import FAMILY_IDS, PolynomialFamily, UnsupportedFamilyError, family
from .triangles import (
    central_factorial_numbers,
    gould_hopper,
    lah,
    lah_degenerate,
    stirling1,
    stirling1_degenerate,
    stirling2,
    stirling2_degenerate,
)
from .verify import SUITES, default_families, run_suite

_CLASSICAL = {
    "s1": (lambda p: lambda n, k: stirling1(n, k), ()),
    "s2": (lambda p: lambda n, k: stirling2(n, k), ()),
    "s1_deg": (lambda p: lambda n, k: stirling1_degenerate(n, k, p["lam"]), ("lam",)),
    "s2_deg": (lambda p: lambda n, k: stirling2_degenerate(n, k, p["lam"]), ("lam",)),
    "lah": (lambda p: lambda n, k: lah(n, k), ()),
    "lah_deg": (lambda p: lambda n, k: lah_degenerate(n, k, p["lam"]), ("lam",)),
    "t1": (lambda p: lambda n, k: central_factorial_numbers(n, k, 1), ()),
    "t2": (lambda p: lambda n, k: central_factorial_numbers(n, k, 2), ()),
    "t1_deg": (lambda p: lambda n, k: central_factorial_numbers(n, k, 1, p["lam"]), ("lam",)),
    "t2_deg": (lambda p: lambda n, k: central_factorial_numbers(n, k, 2, p["lam"]), ("lam",)),
    "r1_deg": (lambda p: lambda n, k: central_factorial_numbers(n, k, 1, p["lam"], "r"), ("lam",)),
    "r2_deg": (lambda p: lambda n, k: central_factorial_numbers(n, k, 2, p["lam"], "r"), ("lam",)),
    "gould_hopper": (lambda p: lambda n, k: gould_hopper(n, k, p["r"], p["s"]), ("r", "s")),
    "eulerian": (lambda p: eulerian.eulerian_number, ()),
}


def _parse_fraction(_ctx, param, value):
    if value is None:
        return None
    try:
        return Fraction(value)
    except (ValueError, ZeroDivisionError):
        raise click.BadParameter(f"{param.name} expects a rational like 3 or -1/3") from None


_PARAM_OPTIONS = [
    click.option("--lambda", "lam", callback=_parse_fraction, default=None,
                 help="Step parameter as p/q."),
    click.option("--r", "r", callback=_parse_fraction, default=None, help="Scale, p/q."),
    click.option("--s", "s", callback=_parse_fraction, default=None, help="Shift, p/q."),
    click.option("--a", "a", callback=_parse_fraction, default=None, help="Weight, p/q."),
]


def _with_param_options(fn):
    for opt in reversed(_PARAM_OPTIONS):
        fn = opt(fn)
    return fn


def _build_family(family_id: str, lam, r, s, a) -> PolynomialFamily:
    try:
        return family(family_id, lam=lam, r=r, s=s, a=a)
    except ValueError as exc:
        raise click.UsageError(str(exc)) from None


def _fmt(value: Fraction) -> str:
    return str(value)


def _emit_triangle(meta: dict, rows: list[list[Fraction]], fmt: str) -> None:
    if fmt == "json":
        payload = {"meta": meta, "rows": [[_fmt(v) for v in row] for row in rows]}
        click.echo(json.dumps(payload))
    elif fmt == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(["n", "k", "value"])
        for n, row in enumerate(rows):
            for k, value in enumerate(row):
                writer.writerow([n, k, _fmt(value)])
        click.echo(buf.getvalue(), nl=False)
    else:
        width = max((len(_fmt(v)) for row in rows for v in row), default=1)
        for row in rows:
            click.echo(" ".join(_fmt(v).rjust(width) for v in row))


@click.group()
def main() -> None:
    """Exact Stirling/Eulerian triangles for polynomial sequences."""


@main.command()
@click.option("--family", "family_id", default=None,
              help=f"Family id; one of: {', '.join(FAMILY_IDS)}.")
@click.option("--classical", "classical_name", default=None,
              help=f"Classical triangle; one of: {', '.join(_CLASSICAL)}.")
@click.option("--kind", type=click.Choice(["s1", "s2", "eulerian"]), default="s2",
              show_default=True, help="Which associated triangle to emit.")
@click.option("--max-n", type=int, required=True)
@_with_param_options
@click.option("--format", "fmt", type=click.Choice(["csv", "json", "ascii"]),
              default="ascii", show_default=True)
def triangle(family_id, classical_name, kind, max_n, lam, r, s, a, fmt) -> None:
    """Emit a number triangle with exact rational entries."""
    if (family_id is None) == (classical_name is None):
        raise click.UsageError("exactly one of --family / --classical is required")
    if max_n < 0:
        raise click.UsageError("--max-n must be nonnegative")
    params = {k: v for k, v in (("lam", lam), ("r", r), ("s", s), ("a", a)) if v is not None}
    if classical_name is not None:
        if classical_name not in _CLASSICAL:
            raise click.UsageError(f"unknown classical triangle {classical_name!r}")
        builder, required = _CLASSICAL[classical_name]
        missing = [name for name in required if name not in params]
        if missing:
            raise click.UsageError(
                f"classical triangle {classical_name!r} needs: {', '.join(missing)}")
        entry = builder(params)
        meta = {"family": None, "kind": f"classical:{classical_name}",
                "params": {k: _fmt(v) for k, v in params.items()}, "max_n": max_n}
    else:
        fam = _build_family(family_id, lam, r, s, a)
        entry = {
            "s1": lambda n, k: associated.s1_assoc(fam, n, k),
            "s2": lambda n, k: associated.s2_assoc(fam, n, k),
            "eulerian": lambda n, k: eulerian.eulerian_assoc(fam, n, k),
        }[kind]
        meta = {"family": family_id, "kind": kind,
                "params": {k: _fmt(v) for k, v in fam.params}, "max_n": max_n}
    try:
        rows = [[entry(n, k) for k in range(n + 1)] for n in range(max_n + 1)]
    except (ValueError, UnsupportedFamilyError) as exc:
        raise click.UsageError(str(exc)) from None
    _emit_triangle(meta, rows, fmt)


@main.command()
@click.option("--suite", type=click.Choice(SUITES), required=True)
@click.option("--family", "family_id", default="all", show_default=True,
              help="Family id, or 'all' for the default parameter fan-out.")
@click.option("--max-n", type=int, default=8, show_default=True)
@_with_param_options
def verify(suite, family_id, max_n, lam, r, s, a) -> None:
    """Run an identity suite; JSON report on stdout, exit 1 on failure."""
    if max_n < 0:
        raise click.UsageError("--max-n must be nonnegative")
    if family_id == "all":
        fams = default_families()
    else:
        fams = [_build_family(family_id, lam, r, s, a)]
    reports = run_suite(suite, fams, max_n)
    click.echo(json.dumps([rep.to_dict() for rep in reports], indent=2))
    if not all(rep.passed for rep in reports):
        sys.exit(1)


@main.command()
@click.option("--family", "family_id", required=True)
@click.option("--kind", type=click.Choice(["s2", "s1", "eulerian"]), default="s2",
              show_default=True)
@click.option("--k", "column", type=int, default=0, show_default=True,
              help="Column index (ignored for --kind eulerian).")
@click.option("--order", type=int, required=True, help="Highest t power to print.")
@_with_param_options
def gf(family_id, kind, column, order, lam, r, s, a) -> None:
    """Dump generating-function coefficients in the t^n/n! convention.

    For s1/s2 each line is ``n,value``; for the Eulerian generating
    function the t^n/n! coefficient is a polynomial, printed as
    ``n,c0,c1,...``.
    """
    if order < 0:
        raise click.UsageError("--order must be nonnegative")
    fam = _build_family(family_id, lam, r, s, a)
    try:
        if kind == "eulerian":
            polys = eulerian.eulerian_gf_polynomials(fam, order)
            for n, poly in enumerate(polys):
                coeffs = [poly.coefficient(i) for i in range(n + 1)]
                click.echo(",".join([str(n)] + [_fmt(c) for c in coeffs]))
            return
        if not 0 <= column <= order:
            raise click.UsageError("--k must lie in [0, order]")
        series = (associated.s2_assoc_gf if kind == "s2" else associated.s1_assoc_gf)(
            fam, column, order)
        for n in range(order + 1):
            click.echo(f"{n},{_fmt(series.egf_coefficient(n))}")
    except UnsupportedFamilyError as exc:
        raise click.UsageError(str(exc)) from None


if __name__ == "__main__":
    main()
