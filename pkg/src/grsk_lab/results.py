"""Small shared result record for the verification-style operations."""

from __future__ import annotations

from dataclasses import dataclass


@dataclass(frozen=True)
class CheckResult:
    """Outcome of an identity check, with both sides kept for reporting."""

    ok: bool
    lhs: str = ""
    rhs: str = ""
    where: str = ""

    def __bool__(self) -> bool:
        return self.ok
