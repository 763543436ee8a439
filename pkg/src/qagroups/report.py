"""Verdict containers shared by every checker."""

from __future__ import annotations

import json
from dataclasses import dataclass, field

PASS = "PASS"
FAIL = "FAIL"
INCONCLUSIVE = "INCONCLUSIVE"
VACUOUS = "VACUOUS"

MAX_LISTED_WITNESSES = 20


@dataclass
class Report:
    name: str
    status: str
    details: dict = field(default_factory=dict)
    witnesses: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return self.status in (PASS, VACUOUS)

    def to_dict(self) -> dict:
        return {
            "name": self.name,
            "status": self.status,
            "details": self.details,
            "witnesses": self.witnesses[:MAX_LISTED_WITNESSES],
            "n_witnesses": len(self.witnesses),
        }

    def render(self, indent: str = "") -> str:
        lines = [f"{indent}[{self.status}] {self.name}"]
        for key, value in self.details.items():
            if isinstance(value, dict):
                value = ", ".join(f"{k}={v}" for k, v in value.items())
            lines.append(f"{indent}    {key}: {value}")
        shown = self.witnesses[:MAX_LISTED_WITNESSES]
        for w in shown:
            lines.append(f"{indent}    witness: {json.dumps(w, ensure_ascii=False, sort_keys=True)}")
        if len(self.witnesses) > len(shown):
            lines.append(f"{indent}    ... {len(self.witnesses) - len(shown)} more witnesses")
        return "\n".join(lines)

    def __str__(self):
        return self.render()
