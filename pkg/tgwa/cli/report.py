"""
Relatório JSON de um comando. Chaves ordenadas e sem horário: duas execuções
com a mesma entrada e os mesmos limites geram bytes idênticos (a não ser que
--timing peça o tempo de parede).
"""

from __future__ import annotations

import hashlib
import json
import sys
from dataclasses import dataclass, field
from pathlib import Path
from typing import Dict, Optional


def digest_bytes(data: bytes) -> str:
    return "sha256:" + hashlib.sha256(data).hexdigest()


def digest_file(path: str) -> str:
    return digest_bytes(Path(path).read_bytes())


@dataclass
class Report:
    command: str
    input_digest: str = ""
    results: Dict[str, object] = field(default_factory=dict)
    caps: Dict[str, int] = field(default_factory=dict)
    wall_time_s: Optional[float] = None

    def as_dict(self) -> Dict[str, object]:
        out: Dict[str, object] = {
            "command": self.command,
            "input_digest": self.input_digest,
            "results": self.results,
            "caps": self.caps,
        }
        if self.wall_time_s is not None:
            out["wall_time_s"] = round(self.wall_time_s, 6)
        return out

    def to_json(self) -> str:
        return json.dumps(self.as_dict(), indent=2, sort_keys=True, ensure_ascii=False, default=str) + "\n"

    def write(self, target: str) -> None:
        """'-' means standard output."""
        text = self.to_json()
        if target == "-":
            sys.stdout.write(text)
        else:
            Path(target).write_text(text, encoding="utf-8")
