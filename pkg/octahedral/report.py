"""
Verification reports: titled sections of checks, each passing iff its computed value equals
the expected one. Emitted as JSON (versioned) or Markdown.
"""
import json
from dataclasses import dataclass, field
from typing import Any

SCHEMA_VERSION = 1


@dataclass(frozen=True)
class Check:
    claim: str
    locus: str
    computed: Any
    expected: Any

    @property
    def passed(self) -> bool:
        return self.computed == self.expected

    def to_json(self) -> dict:
        return {
            "claim": self.claim,
            "locus": self.locus,
            "computed": self.computed,
            "expected": self.expected,
            "pass": self.passed,
        }


@dataclass
class Section:
    name: str
    checks: list = field(default_factory=list)

    def add(self, claim: str, computed, expected, locus: str = "") -> Check:
        check = Check(claim, locus or self.name, computed, expected)
        self.checks.append(check)
        return check

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)


@dataclass
class Report:
    title: str
    sections: list = field(default_factory=list)

    def section(self, name: str) -> Section:
        s = Section(name)
        self.sections.append(s)
        return s

    def extend(self, other: "Report") -> None:
        self.sections.extend(other.sections)

    @property
    def checks(self) -> list:
        return [c for s in self.sections for c in s.checks]

    @property
    def passed(self) -> bool:
        return all(s.passed for s in self.sections)

    @property
    def failures(self) -> list:
        return [c for c in self.checks if not c.passed]

    def to_json(self) -> dict:
        return {
            "schema_version": SCHEMA_VERSION,
            "title": self.title,
            "passed": self.passed,
            "counts": {"checks": len(self.checks), "failed": len(self.failures)},
            "sections": [
                {"name": s.name, "passed": s.passed, "checks": [c.to_json() for c in s.checks]}
                for s in self.sections
            ],
        }

    def to_markdown(self) -> str:
        lines = [f"# {self.title}", ""]
        lines.append(f"{len(self.checks) - len(self.failures)} of {len(self.checks)} checks pass.")
        for s in self.sections:
            lines += ["", f"## {s.name}", "", "| claim | computed | expected | pass |", "|---|---|---|---|"]
            for c in s.checks:
                mark = "yes" if c.passed else "**NO**"
                lines.append(f"| {_cell(c.claim)} | {_cell(c.computed)} | {_cell(c.expected)} | {mark} |")
        return "\n".join(lines) + "\n"


def _cell(value) -> str:
    text = value if isinstance(value, str) else json.dumps(value, ensure_ascii=False)
    return text.replace("|", "\\|")


def render_report(report: Report, fmt: str = "md") -> str:
    if fmt == "json":
        return json.dumps(report.to_json(), indent=2, ensure_ascii=False) + "\n"
    if fmt == "md":
        return report.to_markdown()
    raise ValueError(f"unknown format {fmt}; use md or json")
