"""Replay checks: does a term actually reproduce its sequence?

``verify_term`` compares term values (minus the shift part) against oracle
values over an index range and reports the first mismatch, elapsed time in
integer nanoseconds, and the largest intermediate seen.  ``verify_catalog``
replays every catalog fixture.  ``extraction_direct`` recomputes the digit
extraction through exact Fraction arithmetic on the generating function,
completely bypassing the term evaluator, for two-path cross-checks.
"""

from __future__ import annotations

import time
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .catalog import fixtures
from .polys import RationalFunction
from .recurrence import eval_oracle
from .terms import BudgetExceededError, EvalStats, Term, evaluate


@dataclass(frozen=True, slots=True)
class Failure:
    n: int
    expected: int
    got: int | None


@dataclass(frozen=True, slots=True)
class VerificationReport:
    n_lo: int
    n_hi: int
    checked: int
    first_failure: Failure | None
    elapsed_ns: int
    peak_bits: int
    aborted: str | None = None

    @property
    def ok(self) -> bool:
        return self.first_failure is None and self.aborted is None

    def to_json_dict(self) -> dict:
        failure = None
        if self.first_failure is not None:
            failure = {
                "n": self.first_failure.n,
                "expected": self.first_failure.expected,
                "got": self.first_failure.got,
            }
        return {
            "range": [self.n_lo, self.n_hi],
            "ok": self.ok,
            "checked": self.checked,
            "first_failure": failure,
            "peak_bits": self.peak_bits,
            "elapsed_ns": self.elapsed_ns,
            "aborted": self.aborted,
        }


def verify_term(
    oracle: Sequence[int],
    term: Term,
    c: int,
    n_lo: int,
    n_hi: int,
    var: str = "n",
) -> VerificationReport:
    """Check term(n) - c^(n+1) == oracle[n] for n in [n_lo, n_hi].

    Stops at the first mismatch.  ``oracle`` must cover indices up to n_hi.
    A blown evaluation budget aborts the run and is reported as such rather
    than as a mismatch.
    """
    if n_lo < 0 or n_hi < n_lo:
        raise ValueError("need 0 <= n_lo <= n_hi")
    if len(oracle) <= n_hi:
        raise ValueError(f"oracle covers {len(oracle)} values, need {n_hi + 1}")
    stats = EvalStats()
    started = time.monotonic_ns()
    checked = 0
    first_failure = None
    aborted = None
    for n in range(n_lo, n_hi + 1):
        try:
            got = evaluate(term, {var: n}, stats=stats) - c ** (n + 1)
        except BudgetExceededError as exc:
            aborted = f"n={n}: {exc}"
            break
        checked += 1
        if got != oracle[n]:
            first_failure = Failure(n=n, expected=oracle[n], got=got)
            break
    return VerificationReport(
        n_lo=n_lo,
        n_hi=n_hi,
        checked=checked,
        first_failure=first_failure,
        elapsed_ns=time.monotonic_ns() - started,
        peak_bits=stats.peak_bits,
        aborted=aborted,
    )


def verify_catalog(horizon: int = 40) -> list[tuple[str, VerificationReport]]:
    """Replay every catalog fixture from its valid_from up to the horizon."""
    out = []
    for fix in fixtures():
        oracle = eval_oracle(fix.recurrence, horizon + 1).values
        report = verify_term(oracle, fix.term, fix.shift, fix.valid_from, horizon)
        out.append((fix.id, report))
    return out


def extraction_direct(gf: RationalFunction, b: int, n: int) -> int:
    """floor(b^(n^2) * gf(b^(-n))) mod b^n through exact Fractions.

    This is the representation read off the power series itself, sharing no
    code with the term evaluator, so agreement between the two is evidence
    the term encodes the right expression.  Requires n >= 1 and that the
    generating function has no pole at b^(-n).
    """
    if b < 2:
        raise ValueError("base must be at least 2")
    if n < 1:
        raise ValueError("n must be at least 1")
    x = Fraction(1, b**n)
    value = gf(x) * b ** (n * n)
    return (value.numerator // value.denominator) % b**n
