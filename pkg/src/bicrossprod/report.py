"""Named pass/fail checks with witnesses."""

from __future__ import annotations

from dataclasses import dataclass, field

PASS = "pass"
FAIL = "fail"
SKIP = "skip"


@dataclass
class Check:
    name: str
    status: str
    witness: object = None
    detail: str = ""

    @property
    def passed(self) -> bool:
        return self.status != FAIL

    def to_json(self) -> dict:
        out = {"status": self.status}
        if self.witness is not None:
            out["witness"] = self.witness
        if self.detail:
            out["detail"] = self.detail
        return out


@dataclass
class Report:
    checks: list = field(default_factory=list)

    def add(self, name, ok, witness=None, detail=""):
        status = ok if isinstance(ok, str) else (PASS if ok else FAIL)
        self.checks.append(Check(name, status, None if status == PASS else witness, detail))
        return status != FAIL

    def skip(self, name, detail=""):
        self.checks.append(Check(name, SKIP, None, detail))

    def first_failure(self, name, failures, detail=""):
        """Record ``name`` as failed with the first element of ``failures``, if any."""
        for w in failures:
            return self.add(name, False, w, detail)
        return self.add(name, True, None, detail)

    def extend(self, other: "Report", prefix: str = ""):
        for c in other.checks:
            self.checks.append(Check(prefix + c.name, c.status, c.witness, c.detail))
        return self

    @property
    def ok(self) -> bool:
        return all(c.passed for c in self.checks)

    def failures(self):
        return [c for c in self.checks if c.status == FAIL]

    def names(self):
        return [c.name for c in self.checks]

    def __getitem__(self, name) -> Check:
        for c in self.checks:
            if c.name == name:
                return c
        raise KeyError(name)

    def __contains__(self, name):
        return any(c.name == name for c in self.checks)

    def status(self, name) -> str:
        return self[name].status

    def to_json(self) -> dict:
        return {c.name: c.to_json() for c in self.checks}

    def summary(self) -> str:
        lines = []
        for c in self.checks:
            line = f"{c.status.upper():4} {c.name}"
            if c.status == FAIL and c.witness is not None:
                line += f"  witness={c.witness}"
            lines.append(line)
        return "\n".join(lines)
