"""Machine-readable command reports with a stable field order."""

from __future__ import annotations

import enum
import json
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, List, Optional

from .combinadics import IndexSet
from .numeric import Matrix, Vector
from .textio import format_scalar
from .wedge import WedgeVector


def jsonable(value):
    """Exact scalars become "p/q" strings; floats stay JSON numbers."""
    if isinstance(value, bool) or value is None:
        return value
    if isinstance(value, enum.Enum):
        return value.value
    if isinstance(value, Fraction):
        return format_scalar(value)
    if isinstance(value, float):
        return value + 0.0
    if isinstance(value, int):
        return value
    if isinstance(value, IndexSet):
        return str(value)
    if isinstance(value, (Vector, WedgeVector)):
        return [jsonable(v) for v in value]
    if isinstance(value, Matrix):
        return [[jsonable(v) for v in r] for r in value.rows]
    if isinstance(value, dict):
        return {str(k): jsonable(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [jsonable(v) for v in value]
    return str(value)


@dataclass
class Check:
    name: str
    passed: bool
    witness: Any = None

    def to_dict(self):
        return {
            "name": self.name,
            "status": "pass" if self.passed else "fail",
            "witness": jsonable(self.witness),
        }


@dataclass
class Report:
    command: str
    mode: str
    inputs: dict = field(default_factory=dict)
    outputs: dict = field(default_factory=dict)
    checks: List[Check] = field(default_factory=list)
    notes: List[str] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def to_dict(self):
        return {
            "command": self.command,
            "mode": self.mode,
            "inputs": jsonable(self.inputs),
            "outputs": jsonable(self.outputs),
            "checks": [c.to_dict() for c in self.checks],
            "notes": list(self.notes),
            "passed": self.passed,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2, ensure_ascii=False) + "\n"

    def to_text(self) -> str:
        d = self.to_dict()
        lines = [f"command: {d['command']}", f"mode: {d['mode']}"]
        for section in ("inputs", "outputs"):
            if d[section]:
                lines.append(f"{section}:")
                lines.extend(f"  {k}: {_plain(v)}" for k, v in d[section].items())
        if d["checks"]:
            n_pass = sum(c["status"] == "pass" for c in d["checks"])
            lines.append(f"checks: {n_pass}/{len(d['checks'])} passed")
            for c in d["checks"]:
                line = f"  [{c['status']}] {c['name']}"
                if c["witness"] is not None:
                    line += f"  witness={_plain(c['witness'])}"
                lines.append(line)
        for note in d["notes"]:
            lines.append(f"note: {note}")
        return "\n".join(lines) + "\n"

    def render(self, fmt: Optional[str] = "text") -> str:
        return self.to_json() if fmt == "json" else self.to_text()


def _plain(v):
    if isinstance(v, list):
        if v and all(isinstance(x, list) for x in v):
            return "[" + "; ".join(" ".join(str(y) for y in x) for x in v) + "]"
        return "(" + ", ".join(_plain(x) for x in v) + ")"
    if isinstance(v, dict):
        return "{" + ", ".join(f"{k}: {_plain(x)}" for k, x in v.items()) + "}"
    return str(v)
