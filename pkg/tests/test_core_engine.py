"""
Gate 3 – TGW Construction Engine

Checks that:
  - Datum validation collects every broken standing assumption.
  - The consistency conditions accept the quantum-torus example and reject
    its mutated mu.
  - Reduction is deterministic and lands on reduced monomials.
  - The zero test in A finds relations that do not hold in the free
    construction (X2*X1 = 2*X1*X2, Serre relations, a central commutator).
"""

from dataclasses import replace
from fractions import Fraction

import pytest

from tgwa.cli.datum_file import load_datum
from tgwa.core.algebra import TGWAlgebra
from tgwa.core.datum import check_consistency, validate_datum
from tgwa.core.element import Element
from tgwa.core.expressions import parse_element
from tgwa.core.families import build_sergeev
from tgwa.core.words import RedWord, reduced_monomials_of_degree
from tgwa.errors import DegreeTooLarge, DimensionMismatch, InternalReductionStuck, UnknownVariable
from tgwa.poly.endo import Endo
from tgwa.poly.polynomial import PolyRing


def _datum(name: str):
    return load_datum(name).datum


def _alg(name: str) -> TGWAlgebra:
    return TGWAlgebra(_datum(name))


def _zero(alg: TGWAlgebra, text: str) -> bool:
    return alg.is_zero_in_A(parse_element(alg, text))


# ----------------------------------------------------------------------
# datum
# ----------------------------------------------------------------------


@pytest.mark.parametrize(
    "name", ["ex_mu", "ex_nonsimple_gwa", "weyl", "sergeev_1u1", "kh_a2", "tq_a2_q2", "tq_a1a1_q2"]
)
def test_bundled_fixtures_are_valid_and_consistent(name):
    d = _datum(name)
    report = validate_datum(d)
    assert report.ok, f"{name}: {report.problems}"
    assert check_consistency(d).is_yes, f"{name} should satisfy both consistency conditions"


def test_validation_collects_all_problems():
    ring = PolyRing(("u", "v"))
    u, v = ring.gens()
    swap = Endo((v, u), (v, u))
    shift = Endo((u + 1, v), (u - 1, v))
    d = replace(
        _datum("kh_a2"),
        ring=ring,
        sigma=(swap, shift),
        t=(ring.zero(), u),
        mu=((Fraction(1), Fraction(0)), (Fraction(1), Fraction(2))),
        family="translation",
    )
    problems = validate_datum(d).problems
    assert "sigma_1 and sigma_2 do not commute" in problems
    assert "t_1 is zero" in problems
    assert "mu[1][2] not invertible" in problems
    assert "mu[2][2] must be 1" in problems
    assert "sigma_1 is not a translation" in problems


def test_mutated_mu_breaks_consistency():
    """ex_mu with mu_21 = 1: the (1, 2) condition fails with sides 1 and 2."""
    d = _datum("ex_mu")
    mutated = replace(d, mu=((Fraction(1), Fraction(2)), (Fraction(1), Fraction(1))))
    verdict = check_consistency(mutated)
    assert verdict.is_no
    assert verdict.data["indices"] == [1, 2]
    assert verdict.data["lhs"] == "1" and verdict.data["rhs"] == "2", verdict.message


def test_is_gwa():
    assert _datum("sergeev_1u1").is_gwa() is False
    assert _datum("weyl").is_gwa()
    assert not _datum("ex_mu").is_gwa()


# ----------------------------------------------------------------------
# words and reduction
# ----------------------------------------------------------------------


def test_reduced_monomials_of_degree():
    assert reduced_monomials_of_degree((1, -1)) == [RedWord((2,), (1,))]
    assert reduced_monomials_of_degree((1, 1)) == [RedWord((), (1, 2)), RedWord((), (2, 1))]
    assert reduced_monomials_of_degree((0, 0)) == [RedWord()]
    assert len(reduced_monomials_of_degree((-2, 1, 1))) == 2
    with pytest.raises(DegreeTooLarge):
        reduced_monomials_of_degree((5, 5), deg_cap=6)


def test_redword_rejects_shared_indices():
    with pytest.raises(ValueError):
        RedWord((1,), (1,))


def test_reduce_junction_pairs():
    alg = _alg("kh_a2")
    H = alg.datum.ring.gen("H")
    assert alg.word_element([("Y", 1), ("X", 1)]) == Element.scalar(H)
    assert alg.word_element([("X", 1), ("Y", 1)]) == Element.scalar(H + 1)
    assert alg.word_element([("X", 2), ("Y", 2)]) == Element.scalar(H)


def test_reduce_closest_duplicate():
    """Y1*X2*X1 -> mu_21^{-1} sigma_2(t_1) X2."""
    alg = _alg("kh_a2")
    result = alg.word_element([("Y", 1), ("X", 2), ("X", 1)])
    assert alg.fmt(result) == "(H - 1)*X2", f"got {alg.fmt(result)}"

    mu_alg = _alg("ex_mu")
    result = mu_alg.word_element([("Y", 1), ("X", 2), ("X", 1)])
    assert result == Element.monomial(RedWord((), (2,)), mu_alg.datum.ring.const(2)), mu_alg.fmt(result)


def test_reduce_swaps_with_mu():
    alg = _alg("ex_mu")
    assert alg.fmt(alg.word_element([("X", 1), ("Y", 2)])) == "2*Y2*X1"
    assert alg.fmt(alg.word_element([("X", 2), ("Y", 1)])) == "1/2*Y1*X2"


def test_multiply_twists_coefficients():
    """(X1)(H) = sigma_1(H) X1 = (H + 1) X1."""
    alg = _alg("kh_a2")
    x1 = parse_element(alg, "X1")
    h = parse_element(alg, "H")
    assert alg.fmt(alg.multiply(x1, h)) == "(H + 1)*X1"
    assert alg.fmt(alg.multiply(h, x1)) == "H*X1"


def test_element_parser():
    alg = _alg("weyl")
    assert alg.fmt(parse_element(alg, "Y1*X1 - u")) == "0"
    assert alg.fmt(parse_element(alg, "X1^2*Y1")) == "(u - 2)*X1"
    with pytest.raises(UnknownVariable):
        parse_element(alg, "X2")


def test_gamma_on_generators():
    alg = _alg("kh_a2")
    d = alg.datum
    assert d.fmt(alg.gamma(alg.Y(1), alg.X(1))) == "H"
    assert d.fmt(alg.gamma(alg.X(1), alg.Y(1))) == "H + 1"
    assert alg.gamma(alg.X(1), alg.X(2)).is_zero()


def test_degree_zero_word_must_reduce_to_scalar():
    alg = _alg("ex_mu")
    for word in ([("X", 1), ("X", 2), ("Y", 1), ("Y", 2)], [("Y", 2), ("X", 1), ("Y", 1), ("X", 2)]):
        try:
            result = alg.word_element(word)
        except InternalReductionStuck as exc:  # pragma: no cover
            pytest.fail(f"reduction of {word} got stuck: {exc}")
        assert all(w.is_empty() for w in result.words()), f"{word} -> {alg.fmt(result)}"


# ----------------------------------------------------------------------
# zero test
# ----------------------------------------------------------------------


def test_quotient_relation_in_ex_mu():
    """X2*X1 = 2*X1*X2 holds in A, although both sides differ in A'."""
    alg = _alg("ex_mu")
    relation = parse_element(alg, "X2*X1 - 2*X1*X2")
    assert not relation.is_trivial(), "the relation should not hold in the free construction"
    assert alg.is_zero_in_A(relation)
    assert not _zero(alg, "X2*X1 - X1*X2")


@pytest.mark.parametrize(
    "relation",
    [
        "X1^2*X2 - 2*X1*X2*X1 + X2*X1^2",
        "X2^2*X1 - 2*X2*X1*X2 + X1*X2^2",
        "Y1^2*Y2 - 2*Y1*Y2*Y1 + Y2*Y1^2",
        "Y2^2*Y1 - 2*Y2*Y1*Y2 + Y1*Y2^2",
    ],
)
def test_serre_relations_in_kh_a2(relation):
    alg = _alg("kh_a2")
    assert _zero(alg, relation), f"{relation} should vanish in A"


def test_central_commutator_in_kh_a2():
    alg = _alg("kh_a2")
    c = parse_element(alg, "X1*X2 - X2*X1")
    assert not alg.is_zero_in_A(c), "X1*X2 - X2*X1 must be nonzero in A"
    for gen in ("X1", "X2", "Y1", "Y2", "H"):
        bracket = alg.commutator(c, parse_element(alg, gen))
        assert alg.is_zero_in_A(bracket), f"[X1*X2 - X2*X1, {gen}] should vanish in A"


def test_weyl_relation():
    """Y1*X1 - X1*Y1 = u - (u - 1) = 1 in the Weyl algebra."""
    alg = _alg("weyl")
    assert alg.equal_in_A(parse_element(alg, "Y1*X1 - X1*Y1"), parse_element(alg, "1"))


def test_nonzero_scalar_is_nonzero():
    alg = _alg("sergeev_1u1")
    assert not _zero(alg, "h1 - h2")
    assert _zero(alg, "0")


# ----------------------------------------------------------------------
# families
# ----------------------------------------------------------------------


def test_sergeev_1u1_matches_fixture():
    u = PolyRing(("u",))
    built = build_sergeev([u.one(), u.gen("u"), u.one()])
    fixture = _datum("sergeev_1u1")
    assert built.ring == fixture.ring
    assert built.t == fixture.t, f"t = {[built.fmt(p) for p in built.t]}"
    assert built.sigma == fixture.sigma
    assert validate_datum(built).ok
    assert check_consistency(built).is_yes


def test_sergeev_rank_three_is_consistent():
    u = PolyRing(("u",))
    fs = [u.one(), u.gen("u"), u.parse("u + 1"), u.one()]
    d = build_sergeev(fs)
    assert d.rank == 3
    assert d.t[1] == d.ring.parse("(h2 - h1 + 1)*(h3 - h2 + 1)"), d.fmt(d.t[1])
    assert validate_datum(d).ok
    assert check_consistency(d).is_yes


def test_sergeev_needs_two_polynomials():
    with pytest.raises(DimensionMismatch):
        build_sergeev([PolyRing(("u",)).one()])
