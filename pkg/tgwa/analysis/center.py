"""
Decide se o centro Z(A) está contido em R.

Regras, na ordem:

1 - K não certificado: Unknown.
2 - K = 0: Yes, pois Z(A) está em C_A(R) = A_K = R.
3 - GWA com K != 0: No, R^{Z^n} Z^{(g)} fica fora de R.
4 - Toro quântico (R sem variáveis): escalares de comutação por razões de
    gamma e o reticulado multiplicativo resolvido exatamente.
5 - Busca limitada: para g em K, sistema linear sobre Q nos coeficientes
    (monômio reduzido de grau g) x (monômio de R de grau <= coeff_cap).
"""

from __future__ import annotations

import logging
from fractions import Fraction
from itertools import combinations_with_replacement, product
from typing import Dict, Iterator, List, Optional, Tuple

from tgwa.arith.lattice import Lattice
from tgwa.arith.rational import RatMatrix
from tgwa.arith.relations import multiplicative_relations
from tgwa.core.algebra import TGWAlgebra
from tgwa.core.datum import TGWDatum
from tgwa.core.element import Element
from tgwa.core.words import DegVec, RedWord, add_degrees, neg_degree, reduced_monomials_of_degree, unit_degree
from tgwa.analysis.kernel import KernelDescription
from tgwa.analysis.verdict import Verdict
from tgwa.poly.polynomial import Exponent, Poly

logger = logging.getLogger(__name__)

Unknown = Tuple[RedWord, Exponent]


def monic_word_of_degree(g: DegVec) -> RedWord:
    """Y's for the negative coordinates, then X's for the positive ones."""
    ys = tuple(i + 1 for i, x in enumerate(g) for _ in range(-x) if x < 0)
    xs = tuple(i + 1 for i, x in enumerate(g) for _ in range(x) if x > 0)
    return RedWord(ys, xs)


def monomials_up_to(nvars: int, cap: int) -> List[Exponent]:
    """Exponents of total degree <= cap, constant first, then by degree."""
    out: List[Exponent] = []
    for k in range(cap + 1):
        block = set()
        for combo in combinations_with_replacement(range(nvars), k):
            exp = [0] * nvars
            for v in combo:
                exp[v] += 1
            block.add(tuple(exp))
        out.extend(sorted(block, reverse=True))
    return out


def kernel_degrees(lattice: Lattice, deg_cap: int) -> Iterator[DegVec]:
    """Nonzero g in the lattice with |g|_1 <= deg_cap, ordered by (|g|_1, -g)."""
    n = lattice.ambient_rank
    hits = [
        g
        for g in product(range(-deg_cap, deg_cap + 1), repeat=n)
        if any(g) and sum(abs(x) for x in g) <= deg_cap and lattice.contains(g)
    ]
    hits.sort(key=lambda g: (sum(abs(x) for x in g), tuple(-x for x in g)))
    return iter(hits)


# ----------------------------------------------------------------------
# quantum torus
# ----------------------------------------------------------------------


def commutation_scalar(alg: TGWAlgebra, gen: Element, gen_degree: DegVec, w: RedWord) -> Fraction:
    """lambda with gen * w = lambda * w * gen in A, read off through gamma."""
    target = neg_degree(add_degrees(gen_degree, w.degree(alg.n)))
    m = alg.monic(reduced_monomials_of_degree(target, alg.deg_cap)[0])
    word = alg.monic(w)
    left = alg.gamma(alg.multiply(gen, word), m)
    right = alg.gamma(alg.multiply(word, gen), m)
    return left.constant_value() / right.constant_value()


def _quantum_torus_rule(alg: TGWAlgebra, kernel: Lattice) -> Verdict:
    n = alg.n
    basis = kernel.hermite_basis()
    rows: List[List[Fraction]] = []
    for i in range(1, n + 1):
        for kind, sign in (("X", 1), ("Y", -1)):
            gen = alg.generator(kind, i)
            rows.append(
                [commutation_scalar(alg, gen, unit_degree(n, i, sign), monic_word_of_degree(k)) for k in basis]
            )
    solutions = multiplicative_relations(rows)
    if solutions.is_zero():
        return Verdict.yes(
            "quantum torus: no nonzero degree in K commutes with every generator",
            rule="quantum-torus",
            scalars=[[str(x) for x in row] for row in rows],
        )
    c = solutions.hermite_basis()[0]
    g = tuple(sum(ci * k[j] for ci, k in zip(c, basis)) for j in range(n))
    w = monic_word_of_degree(g)
    return Verdict.no(
        f"{w} is central and not in R",
        rule="quantum-torus",
        degree=list(g),
        witness=str(w),
    )


# ----------------------------------------------------------------------
# bounded search
# ----------------------------------------------------------------------


def _equations(alg: TGWAlgebra, g: DegVec, element: Element) -> Dict[Tuple[int, int, int, Exponent], Fraction]:
    """Coefficients of gamma([gen, element], m) for every generator and test monomial."""
    n = alg.n
    out: Dict[Tuple[int, int, int, Exponent], Fraction] = {}
    for i in range(1, n + 1):
        for s, (kind, sign) in enumerate((("X", 1), ("Y", -1))):
            bracket = alg.commutator(alg.generator(kind, i), element)
            target = neg_degree(add_degrees(g, unit_degree(n, i, sign)))
            for k, m in enumerate(reduced_monomials_of_degree(target, alg.deg_cap)):
                value = alg.gamma(bracket, alg.monic(m))
                for exp, c in value.items():
                    out[(i, s, k, exp)] = c
    return out


def _build(alg: TGWAlgebra, unknowns: List[Unknown], vec: List[Fraction]) -> Element:
    terms: Dict[RedWord, Poly] = {}
    for (w, exp), c in zip(unknowns, vec):
        if c:
            mono = Poly(alg.nvars, {exp: c})
            terms[w] = terms[w] + mono if w in terms else mono
    return Element(alg.nvars, terms)


def central_element_of_degree(alg: TGWAlgebra, g: DegVec, coeff_cap: int) -> Optional[Element]:
    """A central element of degree g that is nonzero in A, or None."""
    unknowns: List[Unknown] = [
        (w, exp)
        for w in reduced_monomials_of_degree(g, alg.deg_cap)
        for exp in monomials_up_to(alg.nvars, coeff_cap)
    ]
    columns = [
        _equations(alg, g, Element.monomial(w, Poly(alg.nvars, {exp: 1}))) for w, exp in unknowns
    ]
    keys = sorted({key for col in columns for key in col})
    if keys:
        matrix = RatMatrix([[col.get(key, Fraction(0)) for col in columns] for key in keys], cols=len(unknowns))
        null = matrix.nullspace()
    else:
        null = [[Fraction(int(j == k)) for j in range(len(unknowns))] for k in range(len(unknowns))]

    for vec in null:
        lead = next(c for c in vec if c != 0)
        vec = [c / lead for c in vec]
        candidate = _build(alg, unknowns, vec)
        if not alg.is_zero_in_A(candidate):
            return candidate
    return None


def bounded_center_search(
    alg: TGWAlgebra, kernel: Lattice, deg_cap: int, coeff_cap: int
) -> Tuple[Optional[DegVec], Optional[Element]]:
    for g in kernel_degrees(kernel, deg_cap):
        found = central_element_of_degree(alg, g, coeff_cap)
        logger.debug("center search at degree %s: %s", g, "found" if found else "none")
        if found is not None:
            return g, found
    return None, None


def center_contained_in_R(
    d: TGWDatum, K: KernelDescription, deg_cap: int = 4, coeff_cap: int = 2
) -> Verdict:
    if not K.certified:
        return Verdict.unknown("kernel of sigma is not certified", kernel=K.as_dict())
    lattice = K.lattice
    if lattice.is_zero():
        return Verdict.yes(
            "K = 0, so Z(A) lies in C_A(R) = A_K = R", rule="trivial-kernel"
        )
    if d.is_gwa():
        k = lattice.hermite_basis()[0]
        w = monic_word_of_degree(k)
        return Verdict.no(
            f"K != 0 in a generalized Weyl algebra: R^(Z^n)*{w} is central",
            rule="gwa",
            degree=list(k),
            witness=str(w),
        )

    alg = TGWAlgebra(d)
    if d.nvars == 0 and all(ti.is_constant() for ti in d.t):
        return _quantum_torus_rule(alg, lattice)

    g, element = bounded_center_search(alg, lattice, deg_cap, coeff_cap)
    if element is not None:
        text = alg.fmt(element)
        return Verdict.no(
            f"{text} is central and not in R",
            rule="bounded-search",
            degree=list(g),
            witness=text,
        )
    logger.info("datum %s: no central element up to degree %d", d.name, deg_cap)
    return Verdict.unknown(
        "bounded search exhausted", deg_cap=deg_cap, coeff_cap=coeff_cap
    )
