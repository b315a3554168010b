"""
Motor da construção TGW: redução a monômios reduzidos, multiplicação,
forma de gradação e o teste de zero na TGWA A = A'/grRad(A').

Fluxo de `reduce` (determinístico):

1 - Coeficientes internos já foram empurrados para a esquerda por `multiply`.
2 - Reescreve o par X_a Y_b mais à esquerda até a palavra ser Y...Y X...X.
3 - Cancela o par de junção Y_i X_i -> t_i e volta a 2.
4 - Se os índices Y e X ainda se intersectam, cancela o par duplicado mais
    próximo (menor q - p, desempate pelo menor p) e volta a 2.
5 - A palavra final é reduzida.
"""

from __future__ import annotations

import logging
from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Tuple

from tgwa.config import parameters
from tgwa.core.datum import TGWDatum
from tgwa.core.element import Element
from tgwa.core.words import (
    DegVec,
    Letter,
    RedWord,
    Word,
    add_degrees,
    format_word,
    neg_degree,
    reduced_monomials_of_degree,
    word_degree,
)
from tgwa.errors import InternalReductionStuck
from tgwa.poly.endo import Endo
from tgwa.poly.polynomial import Poly

logger = logging.getLogger(__name__)


class TGWAlgebra:
    def __init__(self, datum: TGWDatum, deg_cap: int = parameters.DEG_CAP) -> None:
        self.datum = datum
        self.n = datum.rank
        self.nvars = datum.nvars
        self.deg_cap = deg_cap
        self.one = datum.ring.one()
        self._sigma_cache: Dict[DegVec, Endo] = {}
        self._reduce_cache: Dict[Word, Tuple[Poly, RedWord]] = {}
        self._sigma_t = [datum.sigma[i].apply(datum.t[i]) for i in range(self.n)]

    # ------------------------------------------------------------------
    # sigma_g
    # ------------------------------------------------------------------

    def sigma_g(self, g: Sequence[int]) -> Endo:
        g = tuple(g)
        cached = self._sigma_cache.get(g)
        if cached is None:
            cached = Endo.identity(self.nvars)
            for i, gi in enumerate(g):
                if gi:
                    cached = cached.compose(self.datum.sigma[i].power(gi))
            self._sigma_cache[g] = cached
        return cached

    def twist(self, g: Sequence[int], r: Poly) -> Poly:
        if self.nvars == 0 or not any(g) or r.is_constant():
            return r
        return self.sigma_g(g).apply(r)

    # ------------------------------------------------------------------
    # generators
    # ------------------------------------------------------------------

    def generator(self, kind: str, i: int) -> Element:
        w = RedWord((i,), ()) if kind == "Y" else RedWord((), (i,))
        return Element.monomial(w, self.one)

    def X(self, i: int) -> Element:
        return self.generator("X", i)

    def Y(self, i: int) -> Element:
        return self.generator("Y", i)

    def scalar(self, r: Poly) -> Element:
        return Element.scalar(r)

    def monic(self, w: RedWord) -> Element:
        return Element.monomial(w, self.one)

    def word_element(self, word: Sequence[Letter]) -> Element:
        return self.reduce(self.one, tuple(word))

    # ------------------------------------------------------------------
    # reduction
    # ------------------------------------------------------------------

    @staticmethod
    def _leftmost_xy(letters: List[Letter]) -> Optional[int]:
        for i in range(len(letters) - 1):
            if letters[i][0] == "X" and letters[i + 1][0] == "Y":
                return i
        return None

    @staticmethod
    def _closest_duplicate(letters: List[Letter], junction: int) -> Optional[Tuple[int, int]]:
        best: Optional[Tuple[int, int]] = None
        for p in range(junction):
            for q in range(junction, len(letters)):
                if letters[p][1] != letters[q][1]:
                    continue
                if best is None or (q - p, p) < (best[1] - best[0], best[0]):
                    best = (p, q)
        return best

    def _run_reduction(self, word: Word) -> Tuple[Poly, RedWord]:
        n = self.n
        mu = self.datum.mu
        t = self.datum.t
        letters = list(word)
        coeff = self.one
        while not coeff.is_zero():
            # 2. X_a Y_b mais à esquerda
            i = self._leftmost_xy(letters)
            if i is not None:
                a, b = letters[i][1], letters[i + 1][1]
                if a == b:
                    coeff = coeff * self.twist(word_degree(letters[:i], n), self._sigma_t[a - 1])
                    del letters[i : i + 2]
                else:
                    coeff = coeff * mu[a - 1][b - 1]
                    letters[i], letters[i + 1] = letters[i + 1], letters[i]
                continue

            # 3. junção Y_i X_i
            j = sum(1 for kind, _ in letters if kind == "Y")
            if 0 < j < len(letters) and letters[j - 1][1] == letters[j][1]:
                m = letters[j][1]
                coeff = coeff * self.twist(word_degree(letters[:j - 1], n), t[m - 1])
                del letters[j - 1 : j + 1]
                continue

            # 4. par duplicado mais próximo
            pair = self._closest_duplicate(letters, j)
            if pair is None:
                break
            p, q = pair
            m = letters[p][1]
            between_y = [b for _, b in letters[p + 1 : j]]
            between_x = [c for _, c in letters[j:q]]
            scalar = Fraction(1)
            for c in between_x:
                for b in [m] + between_y:
                    scalar /= mu[c - 1][b - 1]
            for b in between_y:
                scalar /= mu[m - 1][b - 1]
            prefix = letters[:p] + letters[j:q]
            coeff = coeff * scalar * self.twist(word_degree(prefix, n), t[m - 1])
            letters = letters[:p] + letters[j:q] + letters[p + 1 : j] + letters[q + 1 :]

        if coeff.is_zero():
            return coeff, RedWord()
        j = sum(1 for kind, _ in letters if kind == "Y")
        result = RedWord(tuple(i for _, i in letters[:j]), tuple(i for _, i in letters[j:]))
        if not any(word_degree(word, n)) and not result.is_empty():
            raise InternalReductionStuck(
                f"degree-zero word {format_word(word)} reduced to {result}"
            )
        return coeff, result

    def _reduce_monic(self, word: Word) -> Tuple[Poly, RedWord]:
        cached = self._reduce_cache.get(word)
        if cached is None:
            cached = self._run_reduction(word)
            self._reduce_cache[word] = cached
            logger.debug(
                "reduce %s -> (%s) %s",
                format_word(word),
                self.datum.fmt(cached[0]),
                cached[1],
            )
        return cached

    def reduce(self, coeff: Poly, word: Sequence[Letter]) -> Element:
        """coeff * word rewritten as a single term r' * m with m reduced."""
        c0, w = self._reduce_monic(tuple(word))
        return Element.monomial(w, coeff * c0)

    # ------------------------------------------------------------------
    # ring operations
    # ------------------------------------------------------------------

    def multiply(self, a: Element, b: Element) -> Element:
        """(r w)(s v) = r sigma_{deg w}(s) w v, each product reduced."""
        terms: Dict[RedWord, Poly] = {}
        for w, r in a.items():
            deg_w = w.degree(self.n)
            for v, s in b.items():
                c0, u = self._reduce_monic(w.word() + v.word())
                if c0.is_zero():
                    continue
                coeff = r * self.twist(deg_w, s) * c0
                terms[u] = terms[u] + coeff if u in terms else coeff
        return Element(self.nvars, terms)

    def product(self, *factors: Element) -> Element:
        result = self.scalar(self.one)
        for f in factors:
            result = self.multiply(result, f)
        return result

    def power(self, a: Element, k: int) -> Element:
        return self.product(*([a] * k))

    def commutator(self, a: Element, b: Element) -> Element:
        return self.multiply(a, b) - self.multiply(b, a)

    def nested_bracket(self, x: Element, operators: Sequence[Element]) -> Element:
        """ad(op_k) ... ad(op_1)(x): operators[0] is applied first."""
        for op in operators:
            x = self.commutator(op, x)
        return x

    def gamma(self, a: Element, b: Element) -> Poly:
        """Degree-zero projection of a*b, an element of R."""
        total = Poly.zero(self.nvars)
        for w, r in a.items():
            deg_w = w.degree(self.n)
            for v, s in b.items():
                if any(add_degrees(deg_w, v.degree(self.n))):
                    continue
                c0, u = self._reduce_monic(w.word() + v.word())
                total = total + r * self.twist(deg_w, s) * c0
        return total

    # ------------------------------------------------------------------
    # zero test in A
    # ------------------------------------------------------------------

    def is_zero_in_A(self, a: Element) -> bool:
        """Each homogeneous a_g vanishes in A iff gamma(a_g, m) = 0 for every
        monic reduced m of degree -g."""
        for g, component in a.homogeneous_components(self.n).items():
            for m in reduced_monomials_of_degree(neg_degree(g), self.deg_cap):
                if not self.gamma(component, self.monic(m)).is_zero():
                    return False
        return True

    def equal_in_A(self, a: Element, b: Element) -> bool:
        return self.is_zero_in_A(a - b)

    def fmt(self, a: Element) -> str:
        return a.format(self.datum.ring.variables)
