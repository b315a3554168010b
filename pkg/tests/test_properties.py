"""
Gate 4 – Randomized Properties of the Engine

Every check draws 100 cases from a seeded generator and compares exact
values:
  - reduce keeps the Z^n-degree and sends degree-zero words into R;
  - gamma(a, b*c) = gamma(a*b, c);
  - gamma(a, b) = sigma_g(gamma(b, a)) for a of degree g, b of degree -g;
  - nonzero multiples of monomials never vanish in A;
  - A_K commutes with R;
  - multiplication is associative in A;
  - the R-value of a degree-zero word agrees with a breadth-first search
    that applies the defining relations directly.
"""

from collections import deque
from fractions import Fraction
from typing import Dict, List, Tuple

import numpy as np
import pytest

from tgwa.cli.datum_file import load_datum
from tgwa.core.algebra import TGWAlgebra
from tgwa.core.datum import TGWDatum, check_consistency
from tgwa.core.element import Element
from tgwa.core.families import build_sergeev
from tgwa.core.words import EMPTY, neg_degree, reduced_monomials_of_degree, word_degree
from tgwa.poly.endo import Endo
from tgwa.poly.polynomial import Poly, PolyRing

CASES = 100


def _quantum_torus_rank3() -> TGWDatum:
    """R = Q, t = 1 and nontrivial scalars mu_12, mu_13."""
    ring = PolyRing(())
    one = Fraction(1)
    mu = (
        (one, Fraction(2), Fraction(3)),
        (Fraction(1, 2), one, one),
        (Fraction(1, 3), one, one),
    )
    return TGWDatum(
        name="torus3",
        ring=ring,
        sigma=tuple(Endo.identity(0) for _ in range(3)),
        t=tuple(ring.one() for _ in range(3)),
        mu=mu,
        family="translation",
    )


def _sergeev_rank3() -> TGWDatum:
    u = PolyRing(("u",))
    return build_sergeev([u.one(), u.gen("u"), u.parse("u + 1"), u.one()])


def _datums() -> List[TGWDatum]:
    named = [load_datum(name).datum for name in ("kh_a2", "ex_mu", "sergeev_1u1", "tq_a1a1_q2")]
    return named + [_sergeev_rank3(), _quantum_torus_rank3()]


DATUMS = _datums()


def _algebras() -> List[TGWAlgebra]:
    return [TGWAlgebra(d) for d in DATUMS]


def _random_word(rng, n: int, max_len: int) -> Tuple:
    length = int(rng.integers(0, max_len + 1))
    return tuple(
        ("X" if rng.integers(0, 2) else "Y", int(rng.integers(1, n + 1))) for _ in range(length)
    )


def _random_degree_zero_word(rng, n: int, max_len: int) -> Tuple:
    pairs = int(rng.integers(1, max_len // 2 + 1))
    letters = []
    for _ in range(pairs):
        i = int(rng.integers(1, n + 1))
        letters += [("X", i), ("Y", i)]
    order = rng.permutation(len(letters))
    return tuple(letters[int(k)] for k in order)


def _random_poly(rng, ring: PolyRing, allow_zero: bool = True) -> Poly:
    while True:
        p = ring.const(int(rng.integers(-3, 4)))
        for g in ring.gens():
            p = p + g * int(rng.integers(-2, 3))
        if allow_zero or not p.is_zero():
            return p


def _random_element(rng, alg: TGWAlgebra, max_len: int = 3, terms: int = 2) -> Element:
    ring = alg.datum.ring
    total = Element.zero(alg.nvars)
    for _ in range(terms):
        word = _random_word(rng, alg.n, max_len)
        total = total + alg.word_element(word).left_mul(_random_poly(rng, ring))
    return total


def _pick(rng, items):
    return items[int(rng.integers(0, len(items)))]


# ----------------------------------------------------------------------
# breadth-first relation oracle
# ----------------------------------------------------------------------


_SIGMA_CACHE: Dict[Tuple[str, Tuple[int, ...]], Endo] = {}


def _sigma_of_degree(d: TGWDatum, g) -> Endo:
    key = (d.name, tuple(g))
    if key not in _SIGMA_CACHE:
        e = Endo.identity(d.nvars)
        for i, gi in enumerate(g):
            e = e.compose(d.sigma[i].power(gi))
        _SIGMA_CACHE[key] = e
    return _SIGMA_CACHE[key]


def _oracle_value(d: TGWDatum, word: Tuple) -> Poly:
    """R-value of a degree-zero word by applying X_iY_j = mu_ij Y_jX_i (both
    directions), Y_iX_i = t_i and X_iY_i = sigma_i(t_i) anywhere in the word.
    The first path that reaches the empty word wins."""
    n = d.rank
    seen: Dict[Tuple, Poly] = {word: d.ring.one()}
    queue = deque([word])
    while queue:
        w = queue.popleft()
        coeff = seen[w]
        if not w:
            return coeff
        for k in range(len(w) - 1):
            (a_kind, a), (b_kind, b) = w[k], w[k + 1]
            if a_kind == b_kind:
                continue
            if a == b:
                s = d.sigma[a - 1].apply(d.t[a - 1]) if a_kind == "X" else d.t[a - 1]
                twisted = _sigma_of_degree(d, word_degree(w[:k], n)).apply(s)
                nxt, value = w[:k] + w[k + 2 :], coeff * twisted
            elif a_kind == "X":
                nxt, value = w[:k] + (w[k + 1], w[k]) + w[k + 2 :], coeff * d.mu[a - 1][b - 1]
            else:
                nxt, value = w[:k] + (w[k + 1], w[k]) + w[k + 2 :], coeff * (1 / d.mu[b - 1][a - 1])
            if nxt not in seen:
                seen[nxt] = value
                queue.append(nxt)
    raise AssertionError(f"oracle never reached the empty word from {word}")


# ----------------------------------------------------------------------
# properties
# ----------------------------------------------------------------------


def test_property_datums_are_consistent():
    for d in DATUMS:
        assert check_consistency(d).is_yes, f"{d.name} is not consistent"


def test_reduce_preserves_degree():
    rng = np.random.default_rng(11)
    algebras = _algebras()
    for _ in range(CASES):
        alg = _pick(rng, algebras)
        word = _random_word(rng, alg.n, 8)
        result = alg.word_element(word)
        expected = word_degree(word, alg.n)
        for w in result.words():
            assert w.degree(alg.n) == expected, f"{alg.datum.name}: {word} -> {w}"


def test_degree_zero_words_reduce_into_R():
    rng = np.random.default_rng(12)
    algebras = _algebras()
    for _ in range(CASES):
        alg = _pick(rng, algebras)
        word = _random_degree_zero_word(rng, alg.n, 10)
        result = alg.word_element(word)
        assert all(w.is_empty() for w in result.words()), f"{alg.datum.name}: {word} -> {alg.fmt(result)}"
        assert not result.is_trivial(), f"{alg.datum.name}: {word} reduced to 0"


def test_gamma_adjoint_identity():
    rng = np.random.default_rng(13)
    algebras = _algebras()
    for _ in range(CASES):
        alg = _pick(rng, algebras)
        a, b, c = (_random_element(rng, alg) for _ in range(3))
        lhs = alg.gamma(a, alg.multiply(b, c))
        rhs = alg.gamma(alg.multiply(a, b), c)
        assert lhs == rhs, (
            f"{alg.datum.name}: gamma(a, bc) = {alg.datum.fmt(lhs)} but gamma(ab, c) = {alg.datum.fmt(rhs)}"
        )


def test_gamma_twist_identity():
    rng = np.random.default_rng(14)
    algebras = _algebras()
    for _ in range(CASES):
        alg = _pick(rng, algebras)
        ring = alg.datum.ring
        word = _random_word(rng, alg.n, 4)
        g = word_degree(word, alg.n)
        a = alg.word_element(word).left_mul(_random_poly(rng, ring))
        m = _pick(rng, reduced_monomials_of_degree(neg_degree(g)))
        b = alg.monic(m).left_mul(_random_poly(rng, ring))
        lhs = alg.gamma(a, b)
        rhs = _sigma_of_degree(alg.datum, g).apply(alg.gamma(b, a))
        assert lhs == rhs, f"{alg.datum.name}: twist identity fails for {word} against {m}"


def test_monomials_do_not_vanish():
    rng = np.random.default_rng(15)
    algebras = _algebras()
    for _ in range(CASES):
        alg = _pick(rng, algebras)
        word = _random_word(rng, alg.n, 6)
        monic = alg.word_element(word)
        assert not alg.is_zero_in_A(monic), f"{alg.datum.name}: {word} vanishes in A"
        m = _pick(rng, reduced_monomials_of_degree(word_degree(word, alg.n)))
        r = _random_poly(rng, alg.datum.ring, allow_zero=False)
        assert not alg.is_zero_in_A(alg.monic(m).left_mul(r)), f"{alg.datum.name}: r*{m} vanishes in A"


@pytest.mark.parametrize("name, step", [("kh_a2", (1, 1)), ("ex_mu", (1, 0)), ("ex_mu", (0, 1))])
def test_kernel_component_centralizes_R(name, step):
    rng = np.random.default_rng(16)
    alg = TGWAlgebra(load_datum(name).datum)
    ring = alg.datum.ring
    for _ in range(CASES):
        k = int(rng.integers(-2, 3))
        g = tuple(k * s for s in step)
        m = _pick(rng, reduced_monomials_of_degree(g))
        a = alg.monic(m).left_mul(_random_poly(rng, ring))
        r = alg.scalar(_random_poly(rng, ring))
        assert alg.is_zero_in_A(alg.commutator(a, r)), f"{name}: [{m}, r] != 0 for g = {g}"


def test_associativity_in_A():
    rng = np.random.default_rng(17)
    algebras = _algebras()
    for _ in range(CASES):
        alg = _pick(rng, algebras)
        a, b, c = (_random_element(rng, alg, max_len=2) for _ in range(3))
        left = alg.multiply(alg.multiply(a, b), c)
        right = alg.multiply(a, alg.multiply(b, c))
        assert alg.equal_in_A(left, right), f"{alg.datum.name}: (ab)c != a(bc)"


def test_reduce_agrees_with_relation_oracle():
    rng = np.random.default_rng(18)
    algebras = _algebras()
    for _ in range(CASES):
        alg = _pick(rng, algebras)
        word = _random_degree_zero_word(rng, alg.n, 8)
        engine = alg.word_element(word).coefficient(EMPTY)
        oracle = _oracle_value(alg.datum, word)
        assert engine == oracle, (
            f"{alg.datum.name}: {word} reduces to {alg.datum.fmt(engine)}, oracle gives {alg.datum.fmt(oracle)}"
        )
