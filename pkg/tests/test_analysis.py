"""
Gate 5 – Structural Analysis of a Datum

Checks that:
  - The kernel of sigma is computed exactly (and flagged when it is not).
  - The finitistic profile recovers the expected Cartan matrices.
  - Z^n-simplicity of R is certified or refuted with an invariant ideal.
  - The centre test follows its rule order and returns explicit witnesses.
  - Commutativity of the centralizer is decided with bracket witnesses.
"""

import pytest

from tgwa.analysis.center import (
    bounded_center_search,
    center_contained_in_R,
    kernel_degrees,
    monic_word_of_degree,
    monomials_up_to,
)
from tgwa.analysis.centralizer import bracket_schedule, centralizer_commutative, r_maximal_commutative
from tgwa.analysis.finitistic import finitistic_profile, lie_type_is_A1n
from tgwa.analysis.invariant_ideals import zn_simplicity
from tgwa.analysis.kernel import kernel_of_sigma
from tgwa.analysis.verdict import Verdict, combine_all
from tgwa.arith.lattice import Lattice
from tgwa.cli.datum_file import datum_from_dict, load_datum
from tgwa.core.algebra import TGWAlgebra
from tgwa.core.words import RedWord
from tgwa.errors import UnknownEntries


def _datum(name: str):
    return load_datum(name).datum


def _rank2_gwa():
    """t = (u, 1), sigma_1(u) = u + 1, sigma_2 = id: K = Z e_2."""
    return datum_from_dict(
        {
            "name": "gwa_u_1",
            "rank": 2,
            "variables": ["u"],
            "sigma": [{"map": {"u": "u+1"}, "inverse": {"u": "u-1"}}, {"map": {}, "inverse": {}}],
            "t": ["u", "1"],
            "mu": [["1", "1"], ["1", "1"]],
            "family": "translation",
        }
    )


def _generic_shift():
    """A translation declared as generic: only the box search applies."""
    return datum_from_dict(
        {
            "name": "generic_shift",
            "rank": 1,
            "variables": ["u"],
            "sigma": [{"map": {"u": "u+1"}, "inverse": {"u": "u-1"}}],
            "t": ["u"],
            "mu": [["1"]],
            "family": "generic",
        }
    )


# ----------------------------------------------------------------------
# verdicts
# ----------------------------------------------------------------------


def test_combine_all_priorities():
    yes, no, unknown = Verdict.yes("ok"), Verdict.no("bad", witness="w"), Verdict.unknown("open")
    assert combine_all({"a": yes, "b": yes}).is_yes
    assert combine_all({"a": unknown, "b": yes}).is_unknown
    combined = combine_all({"a": unknown, "b": no})
    assert combined.is_no
    assert combined.data["condition"] == "b" and combined.data["witness"] == "w"


# ----------------------------------------------------------------------
# kernel
# ----------------------------------------------------------------------


@pytest.mark.parametrize(
    "name, expected",
    [
        ("kh_a2", Lattice(2, ((1, 1),))),
        ("sergeev_1u1", Lattice.zero(2)),
        ("ex_mu", Lattice.full(2)),
        ("weyl", Lattice.zero(1)),
        ("tq_a2_q2", Lattice(2, ((1, 1),))),
        ("tq_a1a1_q2", Lattice.full(2)),
    ],
)
def test_kernel_of_bundled_fixtures(name, expected):
    K = kernel_of_sigma(_datum(name))
    assert K.certified, f"{name}: kernel should be certified"
    assert K.lattice == expected, f"{name}: got {K.lattice}, expected {expected}"


def test_kernel_of_rank2_gwa():
    K = kernel_of_sigma(_rank2_gwa())
    assert K.lattice == Lattice(2, ((0, 1),))
    assert K.method == "translation"


def test_generic_kernel_is_not_certified():
    K = kernel_of_sigma(_generic_shift(), box_radius=2)
    assert not K.certified
    assert K.method == "bounded-box" and K.box_radius == 2
    assert K.lattice.is_zero()
    assert K.as_dict()["box_radius"] == 2


# ----------------------------------------------------------------------
# finitistic profile
# ----------------------------------------------------------------------


def test_finitistic_kh_a2_is_type_a2():
    profile = finitistic_profile(_datum("kh_a2"))
    assert [list(r) for r in profile.cartan] == [[2, -1], [-1, 2]]
    assert not lie_type_is_A1n(profile)


def test_finitistic_ex_mu_is_a1_a1():
    profile = finitistic_profile(_datum("ex_mu"))
    assert [list(r) for r in profile.m] == [[None, 1], [1, None]]
    assert [list(r) for r in profile.cartan] == [[2, 0], [0, 2]]
    assert lie_type_is_A1n(profile)


def test_finitistic_sergeev():
    """sigma_1(t_2) = t_2 + 1, so (t_2 + 2) - 2(t_2 + 1) + t_2 = 0 has length two."""
    profile = finitistic_profile(_datum("sergeev_1u1"))
    assert profile.m[0][1] == 2 and profile.m[1][0] == 2
    assert [list(r) for r in profile.cartan] == [[2, -1], [-1, 2]]


def test_rank_one_is_a1_vacuously():
    assert lie_type_is_A1n(finitistic_profile(_datum("weyl")))


def test_unknown_entries_block_lie_type():
    """A non-affine sigma_1 is searched only up to the bound."""
    d = datum_from_dict(
        {
            "name": "nonaffine",
            "rank": 2,
            "variables": ["u", "v"],
            "sigma": [{"map": {"u": "u + v^2"}, "inverse": {"u": "u - v^2"}}, {"map": {}, "inverse": {}}],
            "t": ["v", "u"],
            "mu": [["1", "1"], ["1", "1"]],
            "family": "generic",
        }
    )
    profile = finitistic_profile(d, bound=0)
    assert not profile.all_known()
    assert profile.unknown_pairs() == [(1, 2)]
    assert profile.m[1][0] == 1
    with pytest.raises(UnknownEntries):
        lie_type_is_A1n(profile)


# ----------------------------------------------------------------------
# Z^n-simplicity
# ----------------------------------------------------------------------


@pytest.mark.parametrize("name", ["ex_mu", "weyl", "sergeev_1u1", "kh_a2", "ex_nonsimple_gwa"])
def test_zn_simple_fixtures(name):
    assert zn_simplicity(_datum(name)).is_yes, f"{name}: R should have no invariant ideals"


def test_zn_tq_a2_has_eigen_variable():
    verdict = zn_simplicity(_datum("tq_a2_q2"))
    assert verdict.is_no
    assert verdict.data["generator"] == "H1_2__0"
    assert verdict.data["eigenvalues"] == ["2", "1/2"]


def test_zn_eigen_affine_form():
    """sigma(u) = 2u - 1 fixes the ideal (u - 1)."""
    d = datum_from_dict(
        {
            "name": "scaled",
            "rank": 1,
            "variables": ["u"],
            "sigma": [{"map": {"u": "2*u - 1"}, "inverse": {"u": "1/2*u + 1/2"}}],
            "t": ["u"],
            "mu": [["1"]],
            "family": "generic",
        }
    )
    verdict = zn_simplicity(d)
    assert verdict.is_no
    assert verdict.data["generator"] == "u - 1"


def test_zn_invariant_variable():
    """sigma(u) = u + 1 on Q[u, v] leaves (v) invariant."""
    d = datum_from_dict(
        {
            "name": "two_vars",
            "rank": 1,
            "variables": ["u", "v"],
            "sigma": [{"map": {"u": "u+1"}, "inverse": {"u": "u-1"}}],
            "t": ["u"],
            "mu": [["1"]],
            "family": "translation",
        }
    )
    verdict = zn_simplicity(d)
    assert verdict.is_no
    assert verdict.data["generator"] == "v"


# ----------------------------------------------------------------------
# centre
# ----------------------------------------------------------------------


def test_center_helpers():
    assert monic_word_of_degree((1, -2, 0, 1)) == RedWord((2, 2), (1, 4))
    assert monomials_up_to(2, 1) == [(0, 0), (1, 0), (0, 1)]
    assert monomials_up_to(0, 3) == [()]
    degrees = list(kernel_degrees(Lattice(2, ((1, 1),)), 4))
    assert degrees == [(1, 1), (-1, -1), (2, 2), (-2, -2)]


@pytest.mark.parametrize("name", ["weyl", "sergeev_1u1", "ex_nonsimple_gwa"])
def test_trivial_kernel_center(name):
    d = _datum(name)
    verdict = center_contained_in_R(d, kernel_of_sigma(d))
    assert verdict.is_yes and verdict.data["rule"] == "trivial-kernel"


def test_center_gwa_rule():
    d = _rank2_gwa()
    verdict = center_contained_in_R(d, kernel_of_sigma(d))
    assert verdict.is_no
    assert verdict.data["rule"] == "gwa"
    assert verdict.data["witness"] == "X2"


def test_center_quantum_torus_rule():
    d = _datum("ex_mu")
    verdict = center_contained_in_R(d, kernel_of_sigma(d))
    assert verdict.is_yes, verdict.message
    assert verdict.data["rule"] == "quantum-torus"
    assert verdict.data["scalars"] == [["1", "1/2"], ["1", "2"], ["2", "1"], ["1/2", "1"]]


def test_quantum_torus_rule_agrees_with_bounded_search():
    d = _datum("ex_mu")
    alg = TGWAlgebra(d)
    g, element = bounded_center_search(alg, kernel_of_sigma(d).lattice, deg_cap=4, coeff_cap=0)
    assert element is None, f"bounded search found {alg.fmt(element)} at {g}"


def test_center_bounded_search_kh_a2():
    d = _datum("kh_a2")
    verdict = center_contained_in_R(d, kernel_of_sigma(d))
    assert verdict.is_no
    assert verdict.data["rule"] == "bounded-search"
    assert verdict.data["degree"] == [1, 1]
    assert verdict.data["witness"] == "X1*X2 - X2*X1"


def test_center_unknown_without_certified_kernel():
    d = _generic_shift()
    verdict = center_contained_in_R(d, kernel_of_sigma(d))
    assert verdict.is_unknown


# ----------------------------------------------------------------------
# centralizer
# ----------------------------------------------------------------------


def test_bracket_schedule_order():
    assert list(bracket_schedule(1)) == [(1, -1), (1, 1), (-1, 1), (-1, -1)]
    assert len(list(bracket_schedule(3))) == 36


def test_centralizer_rank_one_kernel():
    d = _datum("tq_a2_q2")
    verdict = centralizer_commutative(d, kernel_of_sigma(d))
    assert verdict.is_yes and verdict.data["rank"] == 1


def test_centralizer_bounded_brackets():
    d = _datum("tq_a1a1_q2")
    verdict = centralizer_commutative(d, kernel_of_sigma(d), m_cap=3)
    assert verdict.is_yes, verdict.message
    assert verdict.data["bounded"] is True


def test_centralizer_ex_mu_witness():
    """X1*Y2 = 2*Y2*X1, so [X1, Y2] = Y2*X1 != 0."""
    d = _datum("ex_mu")
    verdict = centralizer_commutative(d, kernel_of_sigma(d))
    assert verdict.is_no
    assert (verdict.data["left"], verdict.data["right"]) == ("X1", "Y2")
    assert verdict.data["bracket"] == "Y2*X1"


def test_r_maximal_commutative():
    sergeev = _datum("sergeev_1u1")
    assert r_maximal_commutative(sergeev, kernel_of_sigma(sergeev)).is_yes
    kh = _datum("kh_a2")
    verdict = r_maximal_commutative(kh, kernel_of_sigma(kh))
    assert verdict.is_no and verdict.data["witness"] == "X1*X2"
