"""Verification ledger schemas."""

from typing import List, Optional

from pydantic import BaseModel


class CheckResult(BaseModel):
    """One executed check of the property suite."""

    name: str
    subject: str
    passed: bool
    detail: str = ""
    tolerance: Optional[float] = None


class Observation(BaseModel):
    """A measured fact that is reported but never fails the run."""

    name: str
    subject: str
    detail: str


class VerifyLedger(BaseModel):
    checks: List[CheckResult] = []
    observations: List[Observation] = []

    @property
    def passed(self) -> bool:
        return all(check.passed for check in self.checks)

    @property
    def failures(self) -> List[CheckResult]:
        return [check for check in self.checks if not check.passed]
