"""Check records and report documents.

Library operations that verify identities return lists of ``Check`` rows; the
CLI assembles them into a ``ReportDoc``. A mathematical negative (for example
"not separable") is a passing fact; ``fail`` is reserved for identities that
must hold on valid input. Reports are byte-deterministic: equal inputs give
equal JSON. Per-clause wall-clock timings are therefore opt-in and excluded
by default.
"""

from __future__ import annotations

import hashlib
import json
from dataclasses import dataclass, field

PASS = "pass"
FAIL = "fail"
SKIPPED = "skipped"
UNDEFINED = "undefined"


@dataclass(frozen=True)
class Check:
    """One verified clause: a named instance of a stable law identifier."""

    name: str
    law: str
    status: str
    lhs: str = ""
    rhs: str = ""
    witness: str = ""

    def as_dict(self) -> dict:
        d = {"name": self.name, "law": self.law, "status": self.status}
        if self.lhs:
            d["lhs"] = self.lhs
        if self.rhs:
            d["rhs"] = self.rhs
        if self.witness:
            d["witness"] = self.witness
        return d


def check_eq(name: str, law: str, lhs, rhs, witness: str = "") -> Check:
    """Equality clause; pass exactly when the two exact values coincide."""
    status = PASS if lhs == rhs else FAIL
    return Check(name, law, status, lhs=repr(lhs), rhs=repr(rhs), witness=witness)


def check_that(name: str, law: str, ok: bool, lhs="", rhs="", witness: str = "") -> Check:
    return Check(name, law, PASS if ok else FAIL, lhs=str(lhs), rhs=str(rhs), witness=witness)


def fact(name: str, law: str, value, witness: str = "") -> Check:
    """A reported fact (always status pass); the value goes in ``lhs``."""
    return Check(name, law, PASS, lhs=str(value), witness=witness)


def skipped(name: str, law: str, reason: str) -> Check:
    return Check(name, law, SKIPPED, witness=reason)


def undefined(name: str, law: str, reason: str) -> Check:
    return Check(name, law, UNDEFINED, witness=reason)


def sha256_bytes(data: bytes) -> str:
    return hashlib.sha256(data).hexdigest()


@dataclass
class ReportDoc:
    """A deterministic, machine-diffable run record."""

    tool: str
    version: str
    command: str
    inputs: list = field(default_factory=list)  # [{"path":..., "sha256":...}]
    clauses: list = field(default_factory=list)  # [Check]
    artifacts: dict = field(default_factory=dict)
    timings: "dict[str, float] | None" = None

    def add(self, *checks: Check) -> None:
        self.clauses.extend(checks)

    def extend(self, checks) -> None:
        self.clauses.extend(checks)

    @property
    def failed(self) -> bool:
        return any(c.status == FAIL for c in self.clauses)

    def summary(self) -> dict:
        out = {PASS: 0, FAIL: 0, SKIPPED: 0, UNDEFINED: 0}
        for c in self.clauses:
            out[c.status] += 1
        return out

    def as_dict(self) -> dict:
        doc = {
            "tool": self.tool,
            "version": self.version,
            "command": self.command,
            "inputs": self.inputs,
            "clauses": [c.as_dict() for c in self.clauses],
            "summary": self.summary(),
        }
        if self.artifacts:
            doc["artifacts"] = self.artifacts
        if self.timings is not None:
            doc["timings"] = self.timings
        return doc

    def to_json(self) -> str:
        return json.dumps(self.as_dict(), sort_keys=True, separators=(",", ":")) + "\n"

    def to_markdown(self) -> str:
        lines = [
            f"# {self.tool} {self.version} report",
            "",
            f"command: `{self.command}`",
            "",
        ]
        if self.inputs:
            lines.append("inputs:")
            for entry in self.inputs:
                lines.append(f"- `{entry['path']}` sha256 `{entry['sha256']}`")
            lines.append("")
        lines.append("| clause | law | status | lhs | rhs | witness |")
        lines.append("|---|---|---|---|---|---|")
        for c in self.clauses:
            lines.append(
                f"| {c.name} | {c.law} | {c.status} | {c.lhs} | {c.rhs} | {c.witness} |"
            )
        s = self.summary()
        lines.append("")
        lines.append(
            f"summary: {s[PASS]} pass, {s[FAIL]} fail, {s[SKIPPED]} skipped, "
            f"{s[UNDEFINED]} undefined"
        )
        if self.timings is not None:
            lines.append("")
            lines.append("timings (seconds, non-deterministic):")
            for k, v in self.timings.items():
                lines.append(f"- {k}: {v:.6f}")
        return "\n".join(lines) + "\n"
