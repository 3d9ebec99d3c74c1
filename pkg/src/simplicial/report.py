"""Pass/fail tallies for the verification suites."""

from __future__ import annotations

from dataclasses import dataclass, field


@dataclass
class Report:
    title: str
    counts: dict[str, list[int]] = field(default_factory=dict)  # family -> [passed, total]
    failures: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures

    def record(self, family: str, passed: bool, detail: str = ""):
        entry = self.counts.setdefault(family, [0, 0])
        entry[1] += 1
        if passed:
            entry[0] += 1
        else:
            self.failures.append(f"{family}: {detail}")

    def to_text(self) -> str:
        lines = [self.title]
        for family, (passed, total) in self.counts.items():
            lines.append(f"  {family:<14} {passed}/{total}")
        lines += [f"  FAIL {f}" for f in self.failures]
        lines.append("  ok" if self.ok else f"  {len(self.failures)} failure(s)")
        return "\n".join(lines)
