"""Verification results are data: each check is a named pass/fail with a detail line."""

from __future__ import annotations

from dataclasses import asdict, dataclass
from typing import Iterable


@dataclass(frozen=True)
class Check:
    name: str
    ok: bool
    detail: str = ""

    def to_json(self) -> dict:
        return asdict(self)

    def line(self) -> str:
        return f"[{'PASS' if self.ok else 'FAIL'}] {self.name}" + (f": {self.detail}" if self.detail else "")


def check(name: str, ok: bool, detail: str = "") -> Check:
    return Check(name, bool(ok), detail)


def failures(checks: Iterable[Check]) -> list[Check]:
    return [c for c in checks if not c.ok]


def all_ok(checks: Iterable[Check]) -> bool:
    return not failures(checks)
