"""
Z^n-simplicidade de R: existência de ideais próprios não nulos invariantes
por todos os sigma_i.
"""

from __future__ import annotations

import logging
from fractions import Fraction
from itertools import product
from typing import List, Optional, Sequence, Tuple

import sympy

from tgwa.arith.rational import RatMatrix
from tgwa.arith.roots import rational_roots
from tgwa.core.datum import TGWDatum
from tgwa.analysis.verdict import Verdict
from tgwa.poly.polynomial import Poly

logger = logging.getLogger(__name__)

_LAMBDA = sympy.Symbol("lam")


def _eigen_variable(d: TGWDatum) -> Optional[Tuple[int, List[Fraction]]]:
    """A variable u with sigma_i(u) = lambda_i u for every i."""
    for v in range(d.nvars):
        u = Poly.variable(d.nvars, v)
        scalars = []
        for e in d.sigma:
            img = e.images[v]
            lam = img.coefficient(tuple(int(k == v) for k in range(d.nvars)))
            if lam == 0 or img != u * lam:
                break
            scalars.append(lam)
        else:
            return v, scalars
    return None


def _augmented(a: Sequence[Sequence[Fraction]], b: Sequence[Fraction]) -> List[List[Fraction]]:
    """Matrix of l -> sigma(l) on coefficient vectors (c_1..c_N, c_0)."""
    nv = len(b)
    # sigma(c.u + c0) = sum_j c_j (A_j . u + b_j) + c0
    rows = []
    for k in range(nv):
        rows.append([a[j][k] for j in range(nv)] + [Fraction(0)])
    rows.append([b[j] for j in range(nv)] + [Fraction(1)])
    return rows


def _rational_eigenvalues(m: List[List[Fraction]]) -> List[Fraction]:
    mat = sympy.Matrix([[sympy.Rational(x.numerator, x.denominator) for x in row] for row in m])
    charpoly = Poly.from_sympy(mat.charpoly(_LAMBDA).as_expr(), (_LAMBDA,))
    return rational_roots(charpoly)


def _eigen_linear_form(d: TGWDatum) -> Optional[Tuple[Poly, List[Fraction]]]:
    """A nonconstant affine form l with sigma_i(l) = lambda_i l for every i."""
    if not all(e.is_affine() for e in d.sigma):
        return None
    nv = d.nvars
    maps = []
    candidates = []
    for e in d.sigma:
        a, b = e.affine_parts()
        m = _augmented(a, b)
        maps.append(m)
        candidates.append(sorted(set(_rational_eigenvalues(m)) | {Fraction(1)}))

    for lams in product(*candidates):
        stacked: List[List[Fraction]] = []
        for m, lam in zip(maps, lams):
            for k, row in enumerate(m):
                stacked.append([x - (lam if c == k else 0) for c, x in enumerate(row)])
        for vec in RatMatrix(stacked, cols=nv + 1).nullspace():
            if any(vec[:nv]):
                terms = {tuple(int(k == v) for k in range(nv)): vec[v] for v in range(nv)}
                terms[(0,) * nv] = vec[nv]
                ell = Poly(nv, terms)
                lead = next(c for c in vec[:nv] if c != 0)
                return ell * (1 / lead), list(lams)
    return None


def zn_simplicity(d: TGWDatum) -> Verdict:
    if d.nvars == 0:
        return Verdict.yes("R has no variables, so it is a field")

    if d.family == "translation":
        vectors = [e.translation_vector() for e in d.sigma]
        if all(v is not None for v in vectors):
            rank = RatMatrix(vectors, cols=d.nvars).rank()
            if rank == d.nvars:
                return Verdict.yes(
                    "translation vectors span Q^N: every nonzero invariant ideal contains "
                    "an element of minimal degree, which must be a nonzero constant",
                    translation_vectors=[[str(x) for x in v] for v in vectors],
                )

    found = _eigen_variable(d)
    if found is not None:
        v, lams = found
        name = d.ring.variables[v]
        return Verdict.no(
            f"({name}) is a proper nonzero invariant ideal",
            generator=name,
            eigenvalues=[str(x) for x in lams],
        )

    form = _eigen_linear_form(d)
    if form is not None:
        ell, lams = form
        return Verdict.no(
            f"({d.fmt(ell)}) is a proper nonzero invariant ideal",
            generator=d.fmt(ell),
            eigenvalues=[str(x) for x in lams],
        )

    logger.info("datum %s: no invariant-ideal certificate either way", d.name)
    return Verdict.unknown("no degree-descent certificate and no eigen linear form found")
