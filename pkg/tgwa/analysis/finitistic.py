"""
Perfil finitístico (m_ij) e a matriz de Cartan generalizada a_ij = 1 - m_ij.

A busca usa coeficientes em Q: m_ij é o menor k >= 1 tal que sigma_i^k(t_j)
está no Q-span de {sigma_i^a(t_j) : 0 <= a < k}. O mínimo à direita (menor m
com t_j no span de sigma_i(t_j), ..., sigma_i^m(t_j)) deve coincidir.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from math import comb
from typing import Dict, List, Optional, Sequence, Tuple

from tgwa.arith.rational import RatMatrix
from tgwa.core.datum import TGWDatum
from tgwa.errors import InternalInvariantError, UnknownEntries
from tgwa.poly.endo import Endo
from tgwa.poly.polynomial import Exponent, Poly

logger = logging.getLogger(__name__)

Table = Tuple[Tuple[Optional[int], ...], ...]


@dataclass(frozen=True)
class CartanProfile:
    m: Table  # None: desconhecido (ou diagonal)
    cartan: Table

    @property
    def rank(self) -> int:
        return len(self.m)

    def all_known(self) -> bool:
        return all(
            self.m[i][j] is not None for i in range(self.rank) for j in range(self.rank) if i != j
        )

    def unknown_pairs(self) -> List[Tuple[int, int]]:
        return [
            (i + 1, j + 1)
            for i in range(self.rank)
            for j in range(self.rank)
            if i != j and self.m[i][j] is None
        ]

    def as_dict(self) -> Dict[str, object]:
        return {"m": [list(r) for r in self.m], "cartan": [list(r) for r in self.cartan]}


def _coefficient_rows(polys: Sequence[Poly]) -> List[List]:
    support: List[Exponent] = sorted({e for p in polys for e, _ in p.items()})
    return [[p.coefficient(e) for e in support] for p in polys]


def _rank(polys: Sequence[Poly]) -> int:
    if not polys:
        return 0
    return RatMatrix(_coefficient_rows(polys)).rank()


def _search_limit(sigma: Endo, t: Poly, bound: int) -> int:
    """Orbit length that is guaranteed to expose a dependency."""
    if sigma.is_affine():
        return comb(t.nvars + t.degree, t.degree) + 1
    return bound


def _left_min(sigma: Endo, t: Poly, limit: int) -> Optional[int]:
    orbit = [t]
    rank = 1
    for k in range(1, limit + 1):
        orbit.append(sigma.apply(orbit[-1]))
        new_rank = _rank(orbit)
        if new_rank == rank:
            return k
        rank = new_rank
    return None


def _right_min(sigma: Endo, t: Poly, limit: int) -> Optional[int]:
    shifted: List[Poly] = []
    current = t
    for m in range(1, limit + 1):
        current = sigma.apply(current)
        shifted.append(current)
        if _rank(shifted + [t]) == _rank(shifted):
            return m
    return None


def finitistic_profile(d: TGWDatum, bound: int = 12) -> CartanProfile:
    n = d.rank
    m: List[List[Optional[int]]] = [[None] * n for _ in range(n)]
    for i in range(n):
        for j in range(n):
            if i == j:
                continue
            limit = _search_limit(d.sigma[i], d.t[j], bound)
            left = _left_min(d.sigma[i], d.t[j], limit)
            right = _right_min(d.sigma[i], d.t[j], limit)
            if left is not None and right is not None and left != right:
                raise InternalInvariantError(
                    f"left minimum {left} and right minimum {right} differ for ({i + 1},{j + 1})"
                )
            if left is None or right is None:
                logger.warning("m_%d%d unknown after %d steps", i + 1, j + 1, limit)
            m[i][j] = left if right is not None else None

    cartan = [
        [2 if i == j else (None if m[i][j] is None else 1 - m[i][j]) for j in range(n)]
        for i in range(n)
    ]
    return CartanProfile(tuple(tuple(r) for r in m), tuple(tuple(r) for r in cartan))


def lie_type_is_A1n(profile: CartanProfile) -> bool:
    if not profile.all_known():
        raise UnknownEntries(f"unknown m_ij at {profile.unknown_pairs()}")
    n = profile.rank
    return all(profile.cartan[i][j] == 0 for i in range(n) for j in range(n) if i != j)
