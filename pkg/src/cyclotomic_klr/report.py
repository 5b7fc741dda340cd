"""Pass/fail bookkeeping shared by the verification routines."""

from dataclasses import dataclass, field


@dataclass
class CheckResult:
    name: str
    passed: bool
    detail: str = ""
    witness: object = None

    def line(self):
        return f"{'PASS' if self.passed else 'FAIL'}  {self.name}" + (
            f"  ({self.detail})" if self.detail else "")


@dataclass
class Report:
    title: str
    checks: list = field(default_factory=list)

    def add(self, name, passed, detail="", witness=None):
        self.checks.append(CheckResult(name, bool(passed), detail, witness))
        return bool(passed)

    def extend(self, other, prefix=""):
        for c in other.checks:
            self.checks.append(CheckResult(prefix + c.name, c.passed, c.detail, c.witness))

    @property
    def passed(self):
        return all(c.passed for c in self.checks)

    def failures(self):
        return [c for c in self.checks if not c.passed]

    def __str__(self):
        return "\n".join([self.title] + ["  " + c.line() for c in self.checks])
