"""Verification report types shared by the identity and q-function layers."""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Dict, Optional, Union

from .series import MismatchInfo

Param = Union[int, str]

STATUS_PASS = "pass"
STATUS_FAIL = "fail"
STATUS_ERROR = "error"


@dataclass(frozen=True)
class IdentityCheck:
    """What was checked: a named identity, its parameters, and the order
    (largest exponent) up to which both sides were compared."""

    name: str
    params: Dict[str, Param] = field(default_factory=dict)
    order: int = 0


@dataclass(frozen=True)
class VerificationReport:
    """Outcome of one identity check.

    first_mismatch is present exactly when status is "fail"; on "error" the
    message carries the reason and no comparison result is claimed.
    """

    check: IdentityCheck
    status: str
    first_mismatch: Optional[MismatchInfo] = None
    message: str = ""

    def __post_init__(self):
        if self.status not in (STATUS_PASS, STATUS_FAIL, STATUS_ERROR):
            raise ValueError(f"unknown status {self.status!r}")
        if (self.status == STATUS_FAIL) != (self.first_mismatch is not None):
            raise ValueError("first_mismatch must be present iff status is fail")

    @property
    def passed(self) -> bool:
        return self.status == STATUS_PASS

    def to_dict(self) -> dict:
        mm = self.first_mismatch
        return {
            "name": self.check.name,
            "params": dict(self.check.params),
            "status": self.status,
            "first_mismatch": None
            if mm is None
            else {"exponent": mm.exponent, "lhs": str(mm.lhs), "rhs": str(mm.rhs)},
            "message": self.message,
        }

    def sort_key(self):
        return (self.check.name, json.dumps(self.check.params, sort_keys=True))


def comparison_report(
    check: IdentityCheck, equal: bool, mismatch: Optional[MismatchInfo],
    pass_message: str, fail_message: str,
) -> VerificationReport:
    """Wrap an equal_to_order result as a report."""
    if equal:
        return VerificationReport(check, STATUS_PASS, None, pass_message)
    return VerificationReport(check, STATUS_FAIL, mismatch, fail_message)
