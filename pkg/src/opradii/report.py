"""Result records shared by the check suite and the block-identity verifier.

JSON layout is part of the CLI contract and is kept deterministic: keys are
emitted in a fixed order, floats go through Python's repr (shortest round
trip), and nothing time- or host-dependent is serialized.
"""

from __future__ import annotations

import json
import os
import tempfile
from dataclasses import dataclass

__all__ = ["Witness", "CheckResult", "CheckSummary", "SuiteReport"]


@dataclass(frozen=True)
class Witness:
    """Coordinates that reproduce one check evaluation exactly.

    The matrix is regenerated from (family, dim, seed); every auxiliary input
    is drawn from a generator seeded by a stable hash of the same seed, so the
    witness alone pins down the evaluation.
    """

    family: str
    dim: int
    seed: int
    rho: float | None = None
    nu: float | None = None
    lam: complex | None = None
    s: float | None = None
    t: float | None = None

    def as_json(self, slack: float) -> dict:
        return {
            "family": self.family,
            "dim": self.dim,
            "seed": self.seed,
            "rho": self.rho,
            "nu": self.nu,
            "lambda": None if self.lam is None else [float(self.lam.real), float(self.lam.imag)],
            "s": self.s,
            "t": self.t,
            "slack": slack,
        }


@dataclass(frozen=True)
class CheckResult:
    """One evaluated inequality: pass iff slack >= -tolerance.

    For an inequality lhs <= rhs the slack is rhs - lhs; equalities are
    recorded as lhs = |difference|, rhs = 0, slack = -|difference|, so the
    same rule applies.
    """

    check_id: str
    lhs: float
    rhs: float
    slack: float
    tolerance: float
    passed: bool
    witness: Witness


@dataclass(frozen=True)
class CheckSummary:
    """Aggregate over every evaluation of one check id."""

    check_id: str
    count: int
    min_slack: float | None
    tolerance: float | None  # tolerance at the evaluation attaining min_slack
    passed: bool
    worst: tuple[tuple[Witness, float], ...]  # (witness, slack), worst first

    def as_json(self) -> dict:
        return {
            "id": self.check_id,
            "count": self.count,
            "min_slack": self.min_slack,
            "tolerance": self.tolerance,
            "pass": self.passed,
            "worst_witnesses": [w.as_json(slack) for w, slack in self.worst],
        }


@dataclass(frozen=True)
class SuiteReport:
    """Pass/fail verdict per check plus the overall conjunction.

    ``elapsed_seconds`` lives only on the in-memory object; the JSON form is
    reproducible byte for byte across reruns with the same configuration.
    """

    summaries: tuple[CheckSummary, ...]
    overall_pass: bool
    elapsed_seconds: float = 0.0

    def as_json(self) -> dict:
        return {
            "overall_pass": self.overall_pass,
            "checks": [s.as_json() for s in self.summaries],
        }

    def to_json_text(self) -> str:
        return json.dumps(self.as_json(), indent=2) + "\n"

    def save(self, path: str) -> None:
        # Atomic replace so readers never observe a half-written report.
        directory = os.path.dirname(os.path.abspath(path)) or "."
        fd, tmp = tempfile.mkstemp(dir=directory, prefix=".report-", suffix=".json")
        try:
            with os.fdopen(fd, "w") as fh:
                fh.write(self.to_json_text())
            os.replace(tmp, path)
        except BaseException:
            if os.path.exists(tmp):
                os.unlink(tmp)
            raise

    def summary_for(self, check_id: str) -> CheckSummary:
        for s in self.summaries:
            if s.check_id == check_id:
                return s
        raise KeyError(f"unknown check id: {check_id}")
