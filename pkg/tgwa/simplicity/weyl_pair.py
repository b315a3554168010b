"""
Certificado AxA = A para palavras X: com mu = 1 e c_i = sigma_i(t_i) - t_i
constante não nula, [-Y_i, X_i] = c_i, e aplicar ad(-Y_i) g_i vezes a uma
palavra X de grau g devolve (prod g_i!) (prod c_i^g_i), um escalar não nulo.
"""

from __future__ import annotations

import logging
from fractions import Fraction
from itertools import product
from math import factorial
from typing import List

from sympy.utilities.iterables import multiset_permutations

from tgwa.config import parameters
from tgwa.core.algebra import TGWAlgebra
from tgwa.core.datum import TGWDatum
from tgwa.core.element import Element
from tgwa.errors import InternalInvariantError
from tgwa.analysis.verdict import Verdict

logger = logging.getLogger(__name__)


def _bracket_constants(d: TGWDatum) -> List[Fraction] | Verdict:
    n = d.rank
    for i in range(n):
        for j in range(n):
            if i != j and d.mu[i][j] != 1:
                return Verdict.no(f"mu_{i + 1}{j + 1} = {d.mu[i][j]} != 1", pair=[i + 1, j + 1])
    constants = []
    for i in range(n):
        c = d.sigma[i].apply(d.t[i]) - d.t[i]
        if not c.is_constant() or c.is_zero():
            return Verdict.no(
                f"sigma_{i + 1}(t_{i + 1}) - t_{i + 1} = {d.fmt(c)} is not a nonzero constant",
                index=i + 1,
            )
        constants.append(c.constant_value())
    return constants


def _x_words(n: int, g: tuple) -> List[tuple]:
    letters = [i + 1 for i, k in enumerate(g) for _ in range(k)]
    return [tuple(("X", i) for i in p) for p in multiset_permutations(letters)]


def weyl_pair_certificate(d: TGWDatum, max_degree: int = parameters.WEYL_MAX_DEGREE) -> Verdict:
    found = _bracket_constants(d)
    if isinstance(found, Verdict):
        return found
    constants = found

    alg = TGWAlgebra(d)
    n = d.rank
    minus_y = [-alg.Y(i) for i in range(1, n + 1)]
    checked = 0
    for g in product(range(max_degree + 1), repeat=n):
        if not any(g):
            continue
        # ad(-Y_n) primeiro, ad(-Y_1) por último
        operators: List[Element] = []
        for i in reversed(range(n)):
            operators.extend([minus_y[i]] * g[i])
        expected = Fraction(1)
        for i in range(n):
            expected *= factorial(g[i]) * constants[i] ** g[i]
        target = alg.scalar(d.ring.const(expected))
        for word in _x_words(n, g):
            value = alg.nested_bracket(alg.word_element(word), operators)
            if not alg.equal_in_A(value, target):
                raise InternalInvariantError(
                    f"nested bracket on {word} gave {alg.fmt(value)}, expected {expected}"
                )
            checked += 1
    logger.debug("datum %s: %d X-words verified", d.name, checked)
    return Verdict.yes(
        "mu = 1 and every sigma_i(t_i) - t_i is a nonzero constant: "
        f"nested brackets send X-words with every g_i <= {max_degree} to nonzero scalars",
        constants=[str(c) for c in constants],
        words_checked=checked,
        max_degree=max_degree,
    )
