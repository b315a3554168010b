"""
Veredito de três valores usado por todos os decisores.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Dict, Literal, Tuple

Outcome = Literal["yes", "no", "unknown"]


@dataclass(frozen=True)
class Verdict:
    outcome: Outcome
    message: str = ""
    data: Dict[str, object] = field(default_factory=dict)
    blockers: Tuple[str, ...] = ()

    @classmethod
    def yes(cls, certificate: str, **data: object) -> "Verdict":
        return cls("yes", certificate, dict(data))

    @classmethod
    def no(cls, witness: str, /, **data: object) -> "Verdict":
        return cls("no", witness, dict(data))

    @classmethod
    def unknown(cls, *blockers: str, **data: object) -> "Verdict":
        return cls("unknown", "; ".join(blockers), dict(data), tuple(blockers))

    @property
    def is_yes(self) -> bool:
        return self.outcome == "yes"

    @property
    def is_no(self) -> bool:
        return self.outcome == "no"

    @property
    def is_unknown(self) -> bool:
        return self.outcome == "unknown"

    def label(self) -> str:
        return {"yes": "Yes", "no": "No", "unknown": "Unknown"}[self.outcome]

    def __str__(self) -> str:
        return f"{self.label()}: {self.message}" if self.message else self.label()

    def as_dict(self) -> Dict[str, object]:
        out: Dict[str, object] = {"outcome": self.outcome, "message": self.message}
        if self.data:
            out["data"] = dict(self.data)
        if self.blockers:
            out["blockers"] = list(self.blockers)
        return out


def combine_all(verdicts: Dict[str, Verdict]) -> Verdict:
    """Conjunction: any No wins, then any Unknown, otherwise Yes."""
    for key, v in verdicts.items():
        if v.is_no:
            return Verdict("no", v.message, {**v.data, "condition": key})
    blockers = [f"{key}: {v.message}" for key, v in verdicts.items() if v.is_unknown]
    if blockers:
        return Verdict.unknown(*blockers)
    return Verdict.yes("all conditions hold")
