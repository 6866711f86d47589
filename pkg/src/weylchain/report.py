"""Structured verification outcomes."""

from __future__ import annotations

import json
from dataclasses import asdict, dataclass, field
from typing import Any

PASS = "pass"
FAIL = "fail"
SKIPPED_SCALE = "skipped-scale"
STATUSES = (PASS, FAIL, SKIPPED_SCALE)


@dataclass(frozen=True)
class Check:
    id: str
    description: str
    expected: Any
    observed: Any
    status: str

    def __post_init__(self) -> None:
        if self.status not in STATUSES:
            raise ValueError(f"bad status {self.status!r}")

    @classmethod
    def compare(cls, id: str, description: str, expected: Any, observed: Any) -> "Check":
        return cls(id, description, expected, observed, PASS if expected == observed else FAIL)

    @classmethod
    def flag(cls, id: str, description: str, ok: bool, observed: Any = None) -> "Check":
        return cls(id, description, True, ok if observed is None else observed, PASS if ok else FAIL)


@dataclass
class Report:
    suite: str
    params: dict[str, Any]
    checks: list[Check] = field(default_factory=list)
    wall_time_ms: float | None = None

    def add(self, check: Check) -> Check:
        self.checks.append(check)
        return check

    def compare(self, id: str, description: str, expected: Any, observed: Any) -> Check:
        return self.add(Check.compare(id, description, expected, observed))

    def flag(self, id: str, description: str, ok: bool, observed: Any = None) -> Check:
        return self.add(Check.flag(id, description, ok, observed))

    def extend(self, other: "Report", prefix: str = "") -> None:
        for c in other.checks:
            self.checks.append(Check(prefix + c.id, c.description, c.expected, c.observed, c.status))

    @property
    def passed(self) -> bool:
        return all(c.status != FAIL for c in self.checks)

    @property
    def failures(self) -> list[Check]:
        return [c for c in self.checks if c.status == FAIL]

    def to_dict(self) -> dict[str, Any]:
        return {
            "suite": self.suite,
            "params": dict(self.params),
            "checks": [asdict(c) for c in self.checks],
            "wall_time_ms": self.wall_time_ms,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2, sort_keys=False)

    def to_text(self) -> str:
        head = ", ".join(f"{k}={v}" for k, v in self.params.items())
        lines = [f"[{self.suite}] {head}"]
        for c in self.checks:
            lines.append(f"  {c.status:<13} {c.id}: expected {c.expected!r}, observed {c.observed!r}")
        n_fail = len(self.failures)
        lines.append(f"  => {len(self.checks) - n_fail}/{len(self.checks)} checks without failure")
        if self.wall_time_ms is not None:
            lines.append(f"  wall time {self.wall_time_ms:.1f} ms")
        return "\n".join(lines)
