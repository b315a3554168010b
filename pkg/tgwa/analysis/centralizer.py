"""
Commutativity of the centralizer C_A(R) = A_K, and maximality of R.
"""

from __future__ import annotations

import logging
from typing import Iterator, List, Tuple

from tgwa.core.algebra import TGWAlgebra
from tgwa.core.datum import TGWDatum
from tgwa.core.words import reduced_monomials_of_degree
from tgwa.analysis.center import monic_word_of_degree
from tgwa.analysis.kernel import KernelDescription
from tgwa.analysis.verdict import Verdict

logger = logging.getLogger(__name__)


def _multiples(cap: int, first_sign: int) -> List[int]:
    return [first_sign * m for m in range(1, cap + 1)] + [-first_sign * m for m in range(1, cap + 1)]


def bracket_schedule(m_cap: int) -> Iterator[Tuple[int, int]]:
    """(m, l) pairs: m = 1..cap then -1..-cap, l with the opposite sign first."""
    for m in _multiples(m_cap, 1):
        for l in _multiples(m_cap, -1 if m > 0 else 1):
            yield m, l


def centralizer_commutative(d: TGWDatum, K: KernelDescription, m_cap: int = 3) -> Verdict:
    if not K.certified:
        return Verdict.unknown("kernel of sigma is not certified")
    basis = K.lattice.hermite_basis()
    if len(basis) <= 1:
        return Verdict.yes(f"rank(K) = {len(basis)} <= 1", rank=len(basis))

    alg = TGWAlgebra(d)
    checked = 0
    for i, ki in enumerate(basis):
        for j, kj in enumerate(basis):
            if i == j:
                continue
            for m, l in bracket_schedule(m_cap):
                gi = tuple(m * x for x in ki)
                gj = tuple(l * x for x in kj)
                for w in reduced_monomials_of_degree(gi, alg.deg_cap):
                    for v in reduced_monomials_of_degree(gj, alg.deg_cap):
                        bracket = alg.commutator(alg.monic(w), alg.monic(v))
                        checked += 1
                        if not alg.is_zero_in_A(bracket):
                            return Verdict.no(
                                f"[{w}, {v}] = {alg.fmt(bracket)} != 0",
                                left=str(w),
                                right=str(v),
                                bracket=alg.fmt(bracket),
                            )
    logger.debug("datum %s: %d centralizer brackets vanish", d.name, checked)
    return Verdict.yes(
        f"all brackets between K-basis multiples vanish for |m|, |l| <= {m_cap}",
        rank=len(basis),
        m_cap=m_cap,
        bounded=True,
    )


def r_maximal_commutative(d: TGWDatum, K: KernelDescription) -> Verdict:
    """R is maximal commutative in A iff sigma is injective (R is a domain)."""
    if not K.certified:
        return Verdict.unknown("kernel of sigma is not certified")
    if K.lattice.is_zero():
        return Verdict.yes("sigma is injective, so C_A(R) = A_K = R")
    k = K.lattice.hermite_basis()[0]
    w = monic_word_of_degree(k)
    return Verdict.no(
        f"{w} commutes with R since sigma_g = id for g = {k}",
        degree=list(k),
        witness=str(w),
    )
