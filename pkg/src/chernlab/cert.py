"""Machine-checked certificates: named clauses with pass/fail and witnesses."""

from __future__ import annotations

import json
from dataclasses import dataclass, field

from .errors import CertificateMismatch

SCHEMA = "chernlab/1"


@dataclass
class Clause:
    name: str
    status: str
    witness: dict

    def as_dict(self):
        return {"name": self.name, "status": self.status, "witness": self.witness}


@dataclass
class Certificate:
    pipeline: str
    params: dict
    clauses: list[Clause] = field(default_factory=list)

    def add(self, name: str, ok: bool, witness: dict | None = None) -> bool:
        self.clauses.append(Clause(name, "pass" if ok else "fail", witness or {}))
        return ok

    @property
    def status(self) -> str:
        return "pass" if all(c.status == "pass" for c in self.clauses) else "fail"

    def failed_clauses(self) -> list[str]:
        return [c.name for c in self.clauses if c.status != "pass"]

    def check(self) -> "Certificate":
        bad = self.failed_clauses()
        if bad:
            raise CertificateMismatch(f"clause {bad[0]!r} failed in {self.pipeline}")
        return self

    def as_dict(self) -> dict:
        return {
            "schema": SCHEMA,
            "pipeline": self.pipeline,
            "params": self.params,
            "status": self.status,
            "clauses": [c.as_dict() for c in self.clauses],
        }

    def to_json(self) -> str:
        return json.dumps(self.as_dict(), sort_keys=True, indent=2) + "\n"

    def summary(self) -> str:
        lines = [f"[{self.pipeline}] status: {self.status}"]
        for c in self.clauses:
            lines.append(f"  {'PASS' if c.status == 'pass' else 'FAIL'}  {c.name}")
        return "\n".join(lines)
