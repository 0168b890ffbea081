"""Structured pass/fail reports shared by every verification suite."""

from __future__ import annotations

import json
import time
from dataclasses import dataclass, field

from . import __version__

PASS, FAIL, SKIP = "pass", "fail", "skip"


@dataclass
class Check:
    id: str
    status: str
    details: str = ""
    witness: str | None = None

    def as_dict(self) -> dict:
        return {"id": self.id, "status": self.status, "details": self.details, "witness": self.witness}


@dataclass
class CheckReport:
    suite: str
    checks: list[Check] = field(default_factory=list)
    seed: int = 0
    tool_version: str = __version__
    elapsed_ms: int = 0
    _t0: float = field(default_factory=time.perf_counter, repr=False, compare=False)

    def add(self, id: str, ok: bool | None, details: str = "", witness: str | None = None) -> Check:
        """Record a check; ``ok=None`` records a skip."""
        if any(c.id == id for c in self.checks):
            raise ValueError(f"duplicate check id {id!r}")
        status = SKIP if ok is None else (PASS if ok else FAIL)
        check = Check(id, status, details, witness)
        self.checks.append(check)
        return check

    def extend(self, other: "CheckReport", prefix: str = "") -> None:
        for c in other.checks:
            self.add(prefix + c.id, None if c.status == SKIP else c.status == PASS, c.details, c.witness)

    def finish(self) -> "CheckReport":
        self.elapsed_ms = int((time.perf_counter() - self._t0) * 1000)
        return self

    @property
    def passed(self) -> bool:
        return all(c.status != FAIL for c in self.checks)

    def failures(self) -> list[Check]:
        return [c for c in self.checks if c.status == FAIL]

    def get(self, id: str) -> Check:
        for c in self.checks:
            if c.id == id:
                return c
        raise KeyError(id)

    def as_dict(self) -> dict:
        return {
            "suite": self.suite,
            "checks": [c.as_dict() for c in self.checks],
            "seed": self.seed,
            "tool_version": self.tool_version,
            "elapsed_ms": self.elapsed_ms,
        }

    def to_json(self) -> str:
        return json.dumps(self.as_dict(), indent=2)

    def summary(self) -> str:
        lines = [f"[{self.suite}] {sum(c.status == PASS for c in self.checks)} pass, "
                 f"{len(self.failures())} fail, {sum(c.status == SKIP for c in self.checks)} skip"]
        for c in self.checks:
            lines.append(f"  {c.status.upper():4} {c.id}: {c.details}")
        return "\n".join(lines)


REPORT_SCHEMA = {
    "type": "object",
    "required": ["suite", "checks", "seed", "tool_version", "elapsed_ms"],
    "properties": {
        "suite": {"type": "string"},
        "seed": {"type": "integer"},
        "tool_version": {"type": "string"},
        "elapsed_ms": {"type": "integer"},
        "checks": {
            "type": "array",
            "items": {
                "type": "object",
                "required": ["id", "status", "details", "witness"],
                "properties": {
                    "id": {"type": "string"},
                    "status": {"enum": [PASS, FAIL, SKIP]},
                    "details": {"type": "string"},
                    "witness": {"type": ["string", "null"]},
                },
            },
        },
    },
}
