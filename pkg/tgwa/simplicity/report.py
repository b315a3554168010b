"""
Relatório de simplicidade: o veredito combinado e, por nome, o veredito de
cada condição que entrou nele.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Dict

from tgwa.analysis.verdict import Verdict

LABELS = {"yes": "Simple", "no": "NotSimple", "unknown": "Unknown"}


@dataclass(frozen=True)
class SimplicityReport:
    verdict: Verdict
    conditions: Dict[str, Verdict] = field(default_factory=dict)
    theorem_used: str = ""

    @property
    def label(self) -> str:
        return LABELS[self.verdict.outcome]

    def summary(self) -> str:
        if self.verdict.is_yes or not self.verdict.message:
            return self.label
        return f"{self.label}; {self.verdict.message}"

    def as_dict(self) -> Dict[str, object]:
        return {
            "verdict": self.label,
            "summary": self.summary(),
            "theorem_used": self.theorem_used,
            "conditions": {k: v.as_dict() for k, v in self.conditions.items()},
        }
