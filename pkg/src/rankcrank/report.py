"""Verification reports: a uniform pass/fail shape for every suite.

Each suite (identities, injections, tau, bounds, genfun) runs a batch
of named checks over a range and reports one `CheckResult` per check:
status "pass" or "fail", and for failures a witness dict pinning down
the first counterexample.  Reports serialize to JSON and parse back
bit-identically, which the command-line layer relies on.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Any


@dataclass
class CheckResult:
    id: str
    status: str  # "pass" or "fail"
    witness: dict[str, Any] | None = None

    def to_dict(self) -> dict[str, Any]:
        return {"id": self.id, "status": self.status, "witness": self.witness}


@dataclass
class VerifyReport:
    suite: str
    range: dict[str, Any]
    checks: list[CheckResult] = field(default_factory=list)
    elapsed_ms: int = 0
    info: dict[str, Any] | None = None

    @property
    def ok(self) -> bool:
        return all(c.status == "pass" for c in self.checks)

    def to_dict(self) -> dict[str, Any]:
        out: dict[str, Any] = {
            "suite": self.suite,
            "range": self.range,
            "checks": [c.to_dict() for c in self.checks],
            "elapsed_ms": self.elapsed_ms,
        }
        if self.info is not None:
            out["info"] = self.info
        return out

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2, sort_keys=False)

    @classmethod
    def from_dict(cls, data: dict[str, Any]) -> "VerifyReport":
        for c in data["checks"]:
            if c["status"] not in ("pass", "fail"):
                raise ValueError(f"check {c['id']!r} has status {c['status']!r}")
        checks = [
            CheckResult(id=c["id"], status=c["status"], witness=c.get("witness"))
            for c in data["checks"]
        ]
        return cls(
            suite=data["suite"],
            range=data["range"],
            checks=checks,
            elapsed_ms=data["elapsed_ms"],
            info=data.get("info"),
        )

    @classmethod
    def from_json(cls, text: str) -> "VerifyReport":
        return cls.from_dict(json.loads(text))

    def summary_lines(self) -> list[str]:
        lines = []
        for c in self.checks:
            mark = "ok  " if c.status == "pass" else "FAIL"
            suffix = "" if c.witness is None else f"  {c.witness}"
            lines.append(f"  {mark} {c.id}{suffix}")
        verdict = "all checks passed" if self.ok else "CHECKS FAILED"
        lines.append(f"suite {self.suite}: {verdict} ({len(self.checks)} checks, {self.elapsed_ms} ms)")
        return lines


class CheckRecorder:
    """Accumulates named checks, keeping only the first counterexample.

    `expect(id, condition, witness)` marks the check failed on the
    first false condition; `witness` may be a dict or a zero-argument
    callable producing one (so witnesses cost nothing on the pass path).
    """

    def __init__(self) -> None:
        self._failures: dict[str, dict[str, Any]] = {}
        self._seen: dict[str, None] = {}

    def expect(self, check_id: str, condition: bool, witness: Any = None) -> None:
        self._seen.setdefault(check_id, None)
        if not condition and check_id not in self._failures:
            self._failures[check_id] = witness() if callable(witness) else dict(witness or {})

    def results(self) -> list[CheckResult]:
        out = []
        for check_id in sorted(self._seen):
            if check_id in self._failures:
                out.append(CheckResult(check_id, "fail", self._failures[check_id]))
            else:
                out.append(CheckResult(check_id, "pass"))
        return out
