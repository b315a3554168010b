"""
O dado T_q(C) de uma matriz de Cartan generalizada simétrica C.

Para i < j há variáveis H_ij^(k), k = a_ij, a_ij + 2, ..., -a_ij, guardadas
como `H{i}_{j}__{k - a_ij}`. Com H_ij^(a_ij - 2) = 0:

    sigma_j(H_ij^(k)) = q^k H_ij^(k) + H_ij^(k-2)
    sigma_i = sigma_j^-1 nessas variáveis, os demais sigma_r são a identidade
    t_i = prod_j H_ij,   H_ij = H_ij^(-a_ij) (i < j),   H_ji = sigma_j^-1(H_ij)
"""

from __future__ import annotations

import logging
import re
from fractions import Fraction
from typing import Dict, List, Tuple

from tgwa.arith.lattice import Lattice
from tgwa.arith.rational import RationalLike, as_rational, format_rational
from tgwa.cartan.gcm import GCM, coxeter_components
from tgwa.config import parameters
from tgwa.core.algebra import TGWAlgebra
from tgwa.core.datum import TGWDatum
from tgwa.core.element import Element
from tgwa.errors import ZeroQ
from tgwa.poly.endo import Endo
from tgwa.poly.polynomial import Poly, PolyRing

logger = logging.getLogger(__name__)

_VARIABLE_RE = re.compile(r"^H(\d+)_(\d+)__(\d+)$")


def variable_name(i: int, j: int, k: int, a_ij: int) -> str:
    return f"H{i}_{j}__{k - a_ij}"


def display_name(variable: str, C: GCM) -> str:
    """H1_2__0 -> H12^(-1) for a_12 = -1; other names pass through."""
    match = _VARIABLE_RE.match(variable)
    if match is None:
        return variable
    i, j, offset = (int(x) for x in match.groups())
    k = offset + C[i - 1, j - 1]
    return f"H{i}{j}^({k})"


def quantum_int(k: int, q: RationalLike) -> Fraction:
    """[k]_q = q^(-k+1) + q^(-k+3) + ... + q^(k-1), with [-k]_q = -[k]_q."""
    q = as_rational(q)
    if q == 0:
        raise ZeroQ("q must be nonzero")
    m = abs(k)
    total = sum((q ** (-m + 1 + 2 * s) for s in range(m)), Fraction(0))
    return total if k >= 0 else -total


def _pair_ranges(C: GCM) -> List[Tuple[int, int, List[int]]]:
    out = []
    for i in range(C.n):
        for j in range(i + 1, C.n):
            a = C[i, j]
            out.append((i, j, list(range(a, -a + 1, 2))))
    return out


def build_tq(C: GCM, q: RationalLike, name: str = "") -> TGWDatum:
    C.validate()
    q = as_rational(q)
    if q == 0:
        raise ZeroQ("q must be nonzero")
    n = C.n

    names: List[str] = []
    slots: Dict[Tuple[int, int, int], int] = {}
    pairs = _pair_ranges(C)
    for i, j, ks in pairs:
        for k in ks:
            slots[(i, j, k)] = len(names)
            names.append(variable_name(i + 1, j + 1, k, C[i, j]))
    ring = PolyRing(tuple(names))
    nv = ring.nvars
    gens = ring.gens()

    identity = [Poly.variable(nv, v) for v in range(nv)]
    images = [list(identity) for _ in range(n)]
    inverses = [list(identity) for _ in range(n)]
    top: Dict[Tuple[int, int], Poly] = {}
    top_inverse: Dict[Tuple[int, int], Poly] = {}

    for i, j, ks in pairs:
        forward: Dict[int, Poly] = {}
        backward: Dict[int, Poly] = {}
        for k in ks:
            h = gens[slots[(i, j, k)]]
            below = gens[slots[(i, j, k - 2)]] if (i, j, k - 2) in slots else Poly.zero(nv)
            below_inv = backward.get(k - 2, Poly.zero(nv))
            forward[k] = h * q**k + below
            backward[k] = (h - below_inv) * q ** (-k)
        for k in ks:
            v = slots[(i, j, k)]
            images[j][v], inverses[j][v] = forward[k], backward[k]
            images[i][v], inverses[i][v] = backward[k], forward[k]
        top[(i, j)] = gens[slots[(i, j, ks[-1])]]
        top_inverse[(i, j)] = backward[ks[-1]]

    t: List[Poly] = []
    for i in range(n):
        ti = ring.one()
        for j in range(n):
            if i < j:
                ti = ti * top[(i, j)]
            elif j < i:
                ti = ti * top_inverse[(j, i)]
        t.append(ti)

    sigma = tuple(Endo(tuple(images[r]), tuple(inverses[r])) for r in range(n))
    mu = tuple(tuple(Fraction(1) for _ in range(n)) for _ in range(n))
    datum = TGWDatum(
        name=name or f"tq_{C.n}_q{format_rational(q)}",
        ring=ring,
        sigma=sigma,
        t=tuple(t),
        mu=mu,
        family="triangular-q",
        description=f"T_q(C) for C = {C.as_lists()}, q = {format_rational(q)}",
    )
    logger.debug("built %s with %d variables", datum.name, nv)
    return datum


def kernel_basis_components(C: GCM) -> Lattice:
    """Indicator vectors of the Coxeter graph components."""
    basis = []
    for component in coxeter_components(C):
        basis.append(tuple(int(i + 1 in component) for i in range(C.n)))
    return Lattice(C.n, tuple(basis))


def verify_relation(
    d: TGWDatum, lhs: Element, rhs: Element, deg_cap: int = parameters.DEG_CAP
) -> bool:
    return TGWAlgebra(d, deg_cap).equal_in_A(lhs, rhs)
