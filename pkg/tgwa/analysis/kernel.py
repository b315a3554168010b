"""
Núcleo K = ker(sigma: Z^n -> Aut(R)).

- translation: núcleo inteiro da matriz de vetores de translação (certificado).
- triangular-q: análise por blocos de variáveis acopladas (certificado).
- demais casos: busca na caixa [-r, r]^n (não certificado).
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from itertools import product
from typing import Dict, List, Literal, Optional, Sequence, Tuple

import networkx as nx

from tgwa.arith.lattice import Lattice, integer_kernel
from tgwa.arith.rational import RatMatrix
from tgwa.core.datum import TGWDatum
from tgwa.errors import InternalInvariantError
from tgwa.poly.endo import Endo
from tgwa.poly.polynomial import Poly

logger = logging.getLogger(__name__)

KernelMethod = Literal["translation", "triangular-q", "bounded-box"]


@dataclass(frozen=True)
class KernelDescription:
    lattice: Lattice
    certified: bool
    method: KernelMethod
    box_radius: Optional[int] = None

    def as_dict(self) -> Dict[str, object]:
        out: Dict[str, object] = {
            "basis": self.lattice.as_lists(),
            "rank": self.lattice.rank,
            "certified": self.certified,
            "method": self.method,
        }
        if self.box_radius is not None:
            out["box_radius"] = self.box_radius
        return out


def sigma_power_product(sigma: Sequence[Endo], g: Sequence[int]) -> Endo:
    nvars = sigma[0].nvars if sigma else 0
    e = Endo.identity(nvars)
    for s, k in zip(sigma, g):
        if k:
            e = e.compose(s.power(k))
    return e


def _verify(d: TGWDatum, lattice: Lattice) -> None:
    for g in lattice.basis:
        if not sigma_power_product(d.sigma, g).is_identity():
            raise InternalInvariantError(f"kernel vector {g} does not act trivially")


# ----------------------------------------------------------------------
# translation family
# ----------------------------------------------------------------------


def _translation_kernel(d: TGWDatum) -> Optional[Lattice]:
    vectors = [e.translation_vector() for e in d.sigma]
    if any(v is None for v in vectors):
        return None
    matrix = RatMatrix([[vectors[i][v] for i in range(d.rank)] for v in range(d.nvars)], cols=d.rank)
    return integer_kernel(matrix)


# ----------------------------------------------------------------------
# triangular-q family
# ----------------------------------------------------------------------


def _restricted(e: Endo, block: List[int], inverse: bool = False) -> List[Poly]:
    polys = e.inverse if inverse else e.images
    return [polys[v] for v in block]


def _acts_trivially(e: Endo, block: List[int]) -> bool:
    return all(e.images[v] == Poly.variable(e.nvars, v) for v in block)


def _block_order_is_two(e: Endo, block: List[int]) -> bool:
    """True if e has order two on the block, False if its order is infinite."""
    for v in block:
        diag = e.images[v].coefficient(tuple(int(k == v) for k in range(e.nvars)))
        if diag not in (1, -1):
            return False
    return _acts_trivially(e.compose(e), block)


def _triangular_kernel(d: TGWDatum) -> Optional[Lattice]:
    n, nv = d.rank, d.nvars
    graph = nx.Graph()
    graph.add_nodes_from(range(nv))
    for e in d.sigma:
        for polys in (e.images, e.inverse):
            for v, img in enumerate(polys):
                for w in img.variables_used():
                    graph.add_edge(v, w)

    # colunas: g_1..g_n, depois uma auxiliar por restrição módulo 2
    rows: List[Tuple[Dict[int, int], bool]] = []
    for component in sorted(nx.connected_components(graph), key=min):
        block = sorted(component)
        acting = [i for i in range(n) if not _acts_trivially(d.sigma[i], block)]
        if not acting:
            continue
        if len(acting) == 1:
            i = acting[0]
            two = _block_order_is_two(d.sigma[i], block)
            rows.append(({i: 1}, bool(two)))
            continue
        if len(acting) == 2:
            i, j = acting
            if _restricted(d.sigma[i], block) != _restricted(d.sigma[j], block, inverse=True):
                return None
            two = _block_order_is_two(d.sigma[j], block)
            rows.append(({i: -1, j: 1}, bool(two)))
            continue
        return None

    aux = sum(1 for _, two in rows if two)
    matrix: List[List[int]] = []
    k = 0
    for coeffs, two in rows:
        row = [0] * (n + aux)
        for i, c in coeffs.items():
            row[i] = c
        if two:
            row[n + k] = -2
            k += 1
        matrix.append(row)
    if not matrix:
        return Lattice.full(n)
    return integer_kernel(RatMatrix(matrix, cols=n + aux)).project(n)


# ----------------------------------------------------------------------
# bounded box
# ----------------------------------------------------------------------


def _box_kernel(d: TGWDatum, radius: int) -> Lattice:
    hits = []
    for g in product(range(-radius, radius + 1), repeat=d.rank):
        if any(g) and sigma_power_product(d.sigma, g).is_identity():
            hits.append(g)
    return Lattice(d.rank, tuple(hits))


def kernel_of_sigma(d: TGWDatum, box_radius: int = 3) -> KernelDescription:
    if d.nvars == 0:
        return KernelDescription(Lattice.full(d.rank), True, "translation")

    lattice: Optional[Lattice] = None
    method: KernelMethod = "bounded-box"
    if d.family == "translation":
        lattice, method = _translation_kernel(d), "translation"
    elif d.family == "triangular-q":
        lattice, method = _triangular_kernel(d), "triangular-q"
        if lattice is None:
            logger.warning("datum %s: coupling pattern not recognized, using box search", d.name)

    if lattice is not None:
        _verify(d, lattice)
        logger.debug("kernel of %s via %s: %s", d.name, method, lattice)
        return KernelDescription(lattice, True, method)

    logger.warning("datum %s: kernel from box radius %d is not certified", d.name, box_radius)
    return KernelDescription(_box_kernel(d, box_radius), False, "bounded-box", box_radius)
