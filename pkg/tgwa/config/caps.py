"""
Conjunto de limites em vigor para uma execução do motor.
"""

from __future__ import annotations

from dataclasses import dataclass, asdict, replace
from typing import Dict

from tgwa.config import parameters


@dataclass(frozen=True)
class EngineCaps:
    deg_cap: int
    coeff_cap: int
    center_deg_cap: int
    d_bound: int
    m_cap: int
    box: int
    finitistic_bound: int
    weyl_degree: int

    @classmethod
    def defaults(cls) -> "EngineCaps":
        return cls(
            deg_cap=parameters.DEG_CAP,
            coeff_cap=parameters.CENTER_COEFF_CAP,
            center_deg_cap=parameters.CENTER_DEG_CAP,
            d_bound=parameters.ORE_D_BOUND,
            m_cap=parameters.CENTRALIZER_M_CAP,
            box=parameters.KERNEL_BOX_RADIUS,
            finitistic_bound=parameters.FINITISTIC_BOUND,
            weyl_degree=parameters.WEYL_MAX_DEGREE,
        )

    def override(self, **changes: int | None) -> "EngineCaps":
        """Copy with every non-None keyword replaced."""
        return replace(self, **{k: v for k, v in changes.items() if v is not None})

    def as_dict(self) -> Dict[str, int]:
        return asdict(self)
