"""Check reports: named identities with pass/fail and a failure witness."""

from __future__ import annotations

import json
import time
from dataclasses import dataclass, field
from importlib import resources
from typing import Any

from . import __version__


def _jsonable(x):
    if isinstance(x, (str, int, bool)) or x is None:
        return x
    if isinstance(x, (list, tuple)):
        return [_jsonable(v) for v in x]
    if isinstance(x, dict):
        return {str(k): _jsonable(v) for k, v in x.items()}
    return str(x)


@dataclass
class CheckResult:
    name: str
    anchor: str
    passed: bool
    witness: dict | None = None

    def to_json(self) -> dict:
        return {
            "name": self.name,
            "anchor": self.anchor,
            "passed": self.passed,
            "witness": _jsonable(self.witness),
        }


@dataclass
class Report:
    suite: str
    algebra: str
    checks: list[CheckResult] = field(default_factory=list)
    info: dict[str, Any] = field(default_factory=dict)
    wall_time: float = 0.0

    def add(self, name: str, anchor: str, witness: dict | None = None) -> CheckResult:
        """Record a check; it passes iff ``witness`` is None."""
        if witness is not None and "at" not in witness:
            witness = {"at": [], **witness}
        r = CheckResult(name, anchor, witness is None, witness)
        self.checks.append(r)
        return r

    def extend(self, other: "Report", prefix: str = "") -> None:
        for c in other.checks:
            self.checks.append(CheckResult(prefix + c.name, c.anchor, c.passed, c.witness))
        self.info.update(other.info)

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def __bool__(self) -> bool:
        return self.passed

    def failures(self) -> list[CheckResult]:
        return [c for c in self.checks if not c.passed]

    def get(self, name: str) -> CheckResult:
        for c in self.checks:
            if c.name == name:
                return c
        raise KeyError(name)

    def to_json(self) -> dict:
        return {
            "suite": self.suite,
            "algebra": self.algebra,
            "passed": self.passed,
            "checks": [c.to_json() for c in self.checks],
            "info": _jsonable(self.info),
            "wall_time": self.wall_time,
            "tool_version": __version__,
        }

    def to_text(self) -> str:
        lines = [f"suite {self.suite} on {self.algebra}: {'PASS' if self.passed else 'FAIL'}"]
        for c in self.checks:
            line = f"  [{'pass' if c.passed else 'FAIL'}] {c.name} ({c.anchor})"
            if c.witness:
                line += f" witness={json.dumps(_jsonable(c.witness), ensure_ascii=False)}"
            lines.append(line)
        for k, v in self.info.items():
            lines.append(f"  {k}: {v}")
        lines.append(f"  wall time {self.wall_time:.2f}s")
        return "\n".join(lines)


class timed:
    """Context manager setting ``report.wall_time``."""

    def __init__(self, report: Report):
        self.report = report

    def __enter__(self):
        self.t0 = time.perf_counter()
        return self.report

    def __exit__(self, *exc):
        self.report.wall_time = round(time.perf_counter() - self.t0, 3)
        return False


def _schema(name: str) -> dict:
    text = resources.files("hopfdoubles").joinpath("schemas", name).read_text(encoding="utf-8")
    return json.loads(text)


def report_schema() -> dict:
    return _schema("report.schema.json")


def algebra_schema() -> dict:
    return _schema("algebra.schema.json")


def combine(suite: str, algebra: str, reports: list[Report]) -> Report:
    """Merge suite reports into one, prefixing check names with the suite."""
    out = Report(suite, algebra)
    for r in reports:
        out.extend(r, prefix=f"{r.suite}/")
        out.wall_time += r.wall_time
    out.wall_time = round(out.wall_time, 3)
    return out
