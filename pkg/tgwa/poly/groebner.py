"""
Teste "1 pertence ao ideal" via base de Gröbner (Buchberger, ordem grlex).
"""

from __future__ import annotations

import logging
from typing import Sequence

import sympy

from tgwa.poly.polynomial import Poly

logger = logging.getLogger(__name__)


def groebner_contains_one(generators: Sequence[Poly]) -> bool:
    gens = [g for g in generators if not g.is_zero()]
    if not gens:
        return False
    if any(g.is_constant() for g in gens):
        return True
    nvars = gens[0].nvars
    symbols = [sympy.Symbol(f"v{i}") for i in range(nvars)]
    exprs = [g.to_sympy(symbols) for g in gens]
    basis = sympy.groebner(exprs, *symbols, order="grlex", domain="QQ", method="buchberger")
    logger.debug("groebner basis of %d generators has %d elements", len(gens), len(basis.exprs))
    return any(sympy.sympify(b).is_number and b != 0 for b in basis.exprs)
