"""Verification reports and their JSON / CSV forms.

Integers inside ``data`` are written as decimal strings so consumers with
53-bit floats never truncate exact counts; ``params`` stay plain JSON.
"""
from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass, field
from typing import Any

CONFIRMED = "confirmed"
REFUTED = "refuted"
OUT_OF_BUDGET = "out-of-budget"

EXIT_CODES = {CONFIRMED: 0, REFUTED: 2, OUT_OF_BUDGET: 3}


def stringify_ints(obj: Any) -> Any:
    if isinstance(obj, bool) or obj is None:
        return obj
    if isinstance(obj, int):
        return str(obj)
    if isinstance(obj, dict):
        return {str(k): stringify_ints(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [stringify_ints(x) for x in obj]
    if isinstance(obj, (set, frozenset)):
        return [stringify_ints(x) for x in sorted(obj)]
    return obj


@dataclass
class VerificationReport:
    claim: str
    params: dict
    verdict: str
    data: dict = field(default_factory=dict)
    runtime_ms: float | None = None
    columns: list[str] | None = None  # row layout for CSV, when data has "rows"

    @property
    def confirmed(self) -> bool:
        return self.verdict == CONFIRMED

    def to_dict(self, timing: bool = False) -> dict:
        return {
            "claim": self.claim,
            "params": self.params,
            "verdict": self.verdict,
            "data": stringify_ints(self.data),
            "runtime_ms": round(self.runtime_ms, 3) if timing and self.runtime_ms is not None else None,
        }

    def to_json(self, timing: bool = False) -> str:
        return json.dumps(self.to_dict(timing), sort_keys=True, indent=2) + "\n"

    def to_csv(self) -> str:
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        rows = self.data.get("rows")
        if rows and self.columns:
            writer.writerow(self.columns)
            for row in rows:
                writer.writerow([_cell(row.get(c)) for c in self.columns])
        else:
            writer.writerow(["claim", "verdict", "key", "value"])
            for key in sorted(self.data):
                writer.writerow([self.claim, self.verdict, key, json.dumps(stringify_ints(self.data[key]), sort_keys=True)])
        return buf.getvalue()

    def to_text(self) -> str:
        lines = [f"{self.claim}: {self.verdict}"]
        for key in sorted(self.data):
            if key == "rows":
                lines.append(f"  rows: {len(self.data['rows'])}")
                continue
            lines.append(f"  {key}: {json.dumps(stringify_ints(self.data[key]), sort_keys=True)}")
        return "\n".join(lines) + "\n"


def _cell(v):
    if isinstance(v, bool):
        return "true" if v else "false"
    return "" if v is None else v


@dataclass
class CommandResult:
    """Output of a plain computation (no claim, so no verdict)."""

    command: str
    params: dict
    data: dict
    rows: list[dict] | None = None
    columns: list[str] | None = None
    runtime_ms: float | None = None

    def to_dict(self, timing: bool = False) -> dict:
        out = {"command": self.command, "params": self.params, "data": stringify_ints(self.data)}
        if self.rows is not None:
            out["rows"] = stringify_ints(self.rows)
        out["runtime_ms"] = round(self.runtime_ms, 3) if timing and self.runtime_ms is not None else None
        return out

    def to_json(self, timing: bool = False) -> str:
        return json.dumps(self.to_dict(timing), sort_keys=True, indent=2) + "\n"

    def to_csv(self) -> str:
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        if self.rows is not None and self.columns:
            writer.writerow(self.columns)
            for row in self.rows:
                writer.writerow([_cell(row.get(c)) for c in self.columns])
        else:
            writer.writerow(["key", "value"])
            for key in sorted(self.data):
                writer.writerow([key, json.dumps(stringify_ints(self.data[key]), sort_keys=True)])
        return buf.getvalue()

    def to_text(self) -> str:
        lines = [f"{self.command}:"]
        for key in sorted(self.data):
            lines.append(f"  {key}: {json.dumps(stringify_ints(self.data[key]), sort_keys=True)}")
        if self.rows is not None:
            lines.append(f"  rows: {len(self.rows)}")
        return "\n".join(lines) + "\n"
