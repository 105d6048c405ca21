"""Deterministic verification reports and seed derivation.

All randomness in the package flows from user-supplied integer seeds
through NumPy's SeedSequence/PCG64; child seeds are derived from an
index path so that every sample is reproducible in isolation.
"""

from __future__ import annotations

import dataclasses

import numpy as np

from .numfield import InputError


def derive_seed(*path: int) -> int:
    """Deterministic child seed from a root seed and an index path."""
    entries = [int(p) for p in path]
    if any(p < 0 for p in entries):
        raise InputError("seeds and seed-path entries must be non-negative")
    return int(np.random.SeedSequence(entries).generate_state(1, dtype=np.uint64)[0])


@dataclasses.dataclass
class CheckReport:
    """Outcome of one verification check.

    ``pass`` holds iff no failures were recorded and the worst residual
    stays at or below the tolerance the check ran with.  Samples whose
    hypothesis did not apply are counted in ``vacuous``; a check with
    fewer than the minimum of effective samples is ``inconclusive``
    rather than passing by vacuity.
    """

    check: str
    samples: int
    seed: int
    passed: bool
    max_error: float
    failures: list
    vacuous: int = 0
    inconclusive: bool = False

    def to_json(self) -> dict:
        return {
            "check": self.check,
            "samples": self.samples,
            "seed": self.seed,
            "pass": self.passed,
            "max_error": self.max_error,
            "failures": self.failures,
            "vacuous": self.vacuous,
            "inconclusive": self.inconclusive,
        }


MIN_EFFECTIVE_SAMPLES = 20


class ReportBuilder:
    """Accumulates residuals and counterexamples for one check."""

    def __init__(self, check: str, samples: int, seed: int, tol: float,
                 min_effective: int = MIN_EFFECTIVE_SAMPLES):
        self.check = check
        self.samples = samples
        self.seed = seed
        self.tol = tol
        self.min_effective = min_effective
        self.max_error = 0.0
        self.failures: list = []
        self.effective = 0
        self.vacuous = 0

    def record(self, residual: float, payload) -> None:
        """Register one effective sample; payload is kept on failure only.

        ``payload`` may be a callable so that counterexample serialization
        is paid for only when a sample actually fails.
        """
        self.effective += 1
        residual = float(residual)
        self.max_error = max(self.max_error, residual)
        if residual > self.tol:
            self.failures.append({"residual": residual, "input": _force(payload)})

    def record_flag(self, ok: bool, payload) -> None:
        """Register a boolean law instance (no numeric residual)."""
        self.effective += 1
        if not ok:
            self.failures.append({"input": _force(payload)})

    def skip_vacuous(self) -> None:
        self.vacuous += 1

    def build(self) -> CheckReport:
        return CheckReport(
            check=self.check,
            samples=self.samples,
            seed=self.seed,
            passed=not self.failures,
            max_error=self.max_error,
            failures=self.failures,
            vacuous=self.vacuous,
            inconclusive=self.effective < self.min_effective,
        )


def _force(payload):
    return payload() if callable(payload) else payload
