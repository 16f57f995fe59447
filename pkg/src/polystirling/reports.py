"""Structured results for identity-verification suites.

Verifiers never raise on a mathematical failure; they return a Report
whose checks carry the first counterexample found, so the CLI can render
per-identity tables and exit nonzero without tracebacks.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Optional


def format_value(value) -> str:
    if isinstance(value, (Fraction, int)):
        return str(value)
    return str(value)


@dataclass(frozen=True)
class Check:
    identity: str
    n_range: str
    status: str  # "pass" | "fail" | "skipped"
    reason: Optional[str] = None
    first_failure: Optional[dict] = None

    def to_dict(self) -> dict:
        out = {"identity_id": self.identity, "n_range": self.n_range, "status": self.status}
        if self.reason is not None:
            out["reason"] = self.reason
        if self.first_failure is not None:
            out["first_failure"] = {
                key: (format_value(v) if not isinstance(v, (int, str)) else v)
                for key, v in self.first_failure.items()
            }
        return out


@dataclass(frozen=True)
class Report:
    suite: str
    family: str
    checks: tuple[Check, ...]

    @property
    def passed(self) -> bool:
        return all(c.status != "fail" for c in self.checks)

    def to_dict(self) -> dict:
        return {
            "suite": self.suite,
            "family": self.family,
            "status": "pass" if self.passed else "fail",
            "checks": [c.to_dict() for c in self.checks],
        }


def run_check(identity: str, n_range: str, cases: Iterable[tuple[dict, object, object]]) -> Check:
    """Scan (where, expected, got) triples; fail on the first mismatch."""
    for where, expected, got in cases:
        if expected != got:
            failure = dict(where)
            failure["expected"] = format_value(expected)
            failure["got"] = format_value(got)
            return Check(identity, n_range, "fail", first_failure=failure)
    return Check(identity, n_range, "pass")


def skipped_check(identity: str, n_range: str, reason: str) -> Check:
    return Check(identity, n_range, "skipped", reason=reason)
