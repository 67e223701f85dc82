"""Uniform pass/fail reports returned by the checking operations."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any


@dataclass(frozen=True)
class Report:
    check: str
    ok: bool
    witness: tuple = ()
    details: dict = field(default_factory=dict)

    def __bool__(self) -> bool:
        return self.ok

    def to_json(self) -> dict[str, Any]:
        out = {"check": self.check, "ok": self.ok, "witness": [_plain(w) for w in self.witness]}
        if self.details:
            out["details"] = {k: _plain(v) for k, v in self.details.items()}
        return out


def _plain(value):
    if hasattr(value, "to_json"):
        return value.to_json()
    if isinstance(value, (list, tuple)):
        return [_plain(v) for v in value]
    if isinstance(value, dict):
        return {str(k): _plain(v) for k, v in value.items()}
    return value


def passed(check: str, **details) -> Report:
    return Report(check, True, (), details)


def failed(check: str, *witness, **details) -> Report:
    return Report(check, False, tuple(witness), details)
