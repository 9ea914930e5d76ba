"""Pass/fail reports for verification sweeps."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Dict


@dataclass(frozen=True)
class CheckResult:
    passed: bool
    detail: str = ""

    def to_json(self) -> dict:
        return {"pass": self.passed, "detail": self.detail}


class Report(Dict[str, CheckResult]):
    """Ordered mapping check name -> CheckResult."""

    def add(self, name: str, passed: bool, detail: str = "") -> bool:
        self[name] = CheckResult(bool(passed), detail)
        return bool(passed)

    @property
    def all_passed(self) -> bool:
        return all(r.passed for r in self.values())

    def failures(self):
        return [k for k, r in self.items() if not r.passed]

    def to_json(self) -> dict:
        return {k: r.to_json() for k, r in self.items()}

    def lines(self):
        for k, r in self.items():
            tag = "PASS" if r.passed else "FAIL"
            yield f"{tag} {k}" + (f": {r.detail}" if r.detail else "")
