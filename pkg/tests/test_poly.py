"""
Gate 2 – Polynomial Ring

Checks that:
  - The expression parser follows its grammar and rejects juxtaposition.
  - Poly arithmetic, substitution and printing are exact and canonical.
  - Substitution endomorphisms compose and invert as declared.
  - Shift resultants agree with the Sylvester determinant at random points and,
    with gcds, detect common factors of t and its shifts.
  - The Gröbner "1 in ideal" test separates proper from unit ideals.
"""

from fractions import Fraction

import numpy as np
import pytest

from tgwa.errors import (
    DimensionMismatch,
    PolySyntaxError,
    UnknownVariable,
    ZeroPolynomial,
    ZeroValue,
)
from tgwa.poly.endo import Endo, apply_endo, endos_commute, family_problems, is_automorphism_pair
from tgwa.poly.groebner import groebner_contains_one
from tgwa.poly.parser import parse_poly
from tgwa.poly.polynomial import Poly, PolyRing
from tgwa.poly.univariate import resultant_at, shift_resultant, univariate_gcd

R1 = PolyRing(("u",))
R2 = PolyRing(("h1", "h2"))


def _translation(ring: PolyRing, shifts) -> Endo:
    gens = ring.gens()
    images = tuple(g + s for g, s in zip(gens, shifts))
    inverse = tuple(g - s for g, s in zip(gens, shifts))
    return Endo(images, inverse)


# ----------------------------------------------------------------------
# parser / printing
# ----------------------------------------------------------------------


def test_parse_and_format_canonical():
    p = R2.parse("(h1 + 1)^2 - h1^2 - 2*h1")
    assert p == R2.one(), f"expected 1, got {R2.format(p)}"
    assert R2.format(R2.parse("h2 - h1")) == "-h1 + h2"
    assert R1.format(R1.parse("3/2*u^2 - u + 1/3")) == "3/2*u^2 - u + 1/3"


def test_parse_poly_function():
    assert parse_poly("h2 - h1", ("h1", "h2")) == R2.parse("h2 - h1")
    assert R2.format(parse_poly("h2-h1", ("h1", "h2"))) == "-h1 + h2"
    with pytest.raises(UnknownVariable):
        parse_poly("h3", ("h1", "h2"))


def test_parse_precedence():
    assert R1.parse("2*u^2") == R1.parse("2*(u^2)")
    assert R1.parse("-u^2") == -(R1.gen("u") ** 2)
    assert R1.parse("1 - u - u") == R1.parse("1 - 2*u")


@pytest.mark.parametrize("text", ["2u", "u u", "(u + 1)(u - 1)"])
def test_juxtaposition_is_rejected(text):
    with pytest.raises(PolySyntaxError):
        R1.parse(text)


@pytest.mark.parametrize("text", ["", "u +", "u^", "u^u", "1/0", "u $ 1", "(u"])
def test_syntax_errors(text):
    with pytest.raises(PolySyntaxError):
        R1.parse(text)


@pytest.mark.parametrize("text", ["u + 1 ", " u + 1", "\tu + 1\t", "u + 1\n", "\n u\t+ 1 \r\n"])
def test_surrounding_whitespace_is_ignored(text):
    assert parse_poly(text, ("u",)) == parse_poly("u + 1", ("u",))


@pytest.mark.parametrize("text", ["   ", "\n\t"])
def test_blank_input_is_rejected(text):
    with pytest.raises(PolySyntaxError):
        R1.parse(text)


def test_unknown_variable():
    with pytest.raises(UnknownVariable):
        R1.parse("u + v")


def test_zero_prints_as_zero():
    assert R2.format(R2.zero()) == "0"
    assert R2.zero().degree == -1


# ----------------------------------------------------------------------
# arithmetic
# ----------------------------------------------------------------------


def test_arithmetic_identities():
    h1, h2 = R2.gens()
    p = (h1 + h2) * (h1 - h2)
    assert p == h1**2 - h2**2
    assert (p - p).is_zero()
    assert (h1 * 0).is_zero()
    assert (h1 + Fraction(1, 2)).constant_value() == Fraction(1, 2)


def test_mismatched_rings():
    with pytest.raises(DimensionMismatch):
        R1.gen("u") + R2.gen("h1")


def test_substitute_and_evaluate():
    h1, h2 = R2.gens()
    p = h1 * h2 + 3
    q = p.substitute([h1 + 1, h2 - 1])
    assert q == (h1 + 1) * (h2 - 1) + 3
    assert p.evaluate([2, Fraction(1, 2)]) == 4


def test_homogeneous_part_and_degree():
    p = R2.parse("h1^3 + h1*h2^2 + h2 + 5")
    assert p.degree == 3
    assert p.homogeneous_part(3) == R2.parse("h1^3 + h1*h2^2")
    assert p.homogeneous_part(0) == R2.const(5)
    assert p.variables_used() == [0, 1]


# ----------------------------------------------------------------------
# endomorphisms
# ----------------------------------------------------------------------


def test_translation_endo_powers():
    sigma = _translation(R1, [1])
    u = R1.gen("u")
    assert sigma.power(3).apply(u) == u + 3
    assert sigma.power(-2).apply(u) == u - 2
    assert sigma.power(0).is_identity()
    assert sigma.translation_vector() == [1]
    assert is_automorphism_pair(sigma)
    assert apply_endo(sigma, u ** 2) == sigma.apply(u ** 2) == (u + 1) ** 2


def test_compose_order():
    h1, h2 = R2.gens()
    # a: h1 -> h1 + h2, b: h2 -> 2*h2
    a = Endo((h1 + h2, h2), (h1 - h2, h2))
    b = Endo((h1, 2 * h2), (h1, Fraction(1, 2) * h2))
    ab = a.compose(b)
    for p in (h1, h2, h1 * h2):
        assert ab.apply(p) == a.apply(b.apply(p)), f"compose is not a o b on {R2.format(p)}"
    assert is_automorphism_pair(ab)
    assert not endos_commute(a, b)


def test_bad_inverse_is_detected():
    u = R1.gen("u")
    assert not is_automorphism_pair(Endo((u + 1,), (u + 1,)))


def test_affine_parts():
    h1, h2 = R2.gens()
    e = Endo((2 * h1 + 3, h1 + h2), (Fraction(1, 2) * h1 - Fraction(3, 2), h2 - Fraction(1, 2) * h1 + Fraction(3, 2)))
    a, b = e.affine_parts()
    assert a == [[2, 0], [1, 1]]
    assert b == [3, 0]
    assert e.translation_vector() is None


def test_family_problems():
    h1, h2 = R2.gens()
    assert family_problems("translation", [_translation(R2, [1, 0])], R2.variables) == []
    scale = Endo((2 * h1, h2), (Fraction(1, 2) * h1, h2))
    assert family_problems("translation", [scale], R2.variables) == ["sigma_1 is not a translation"]
    lower = Endo((h1 + h2, h2), (h1 - h2, h2))
    problems = family_problems("triangular-q", [lower], R2.variables)
    assert problems and "later variable" in problems[0]
    assert family_problems("bogus", [], R2.variables) == ["unknown family 'bogus'"]


# ----------------------------------------------------------------------
# univariate / groebner
# ----------------------------------------------------------------------


def test_shift_resultant_of_linear():
    # Res(u, u + x) = x
    r = shift_resultant(R1.gen("u"))
    assert r == Poly.variable(1, 0)


def test_shift_resultant_detects_common_shift():
    # t = u(u + 1): t and t(u + 1) share the factor u + 1
    t = R1.parse("u*(u + 1)")
    r = shift_resultant(t)
    x = Poly.variable(1, 0)
    assert r == x**4 - x**2, f"got {r}"
    assert resultant_at(t, Fraction(1)) == 0
    assert resultant_at(t, Fraction(2)) != 0


def _random_univariate(rng) -> Poly:
    degree = int(rng.integers(1, 5))
    coeffs = [int(c) for c in rng.integers(-5, 6, size=degree + 1)]
    if coeffs[-1] == 0:
        coeffs[-1] = int(rng.choice([-2, -1, 1, 3]))
    return Poly(1, {(k,): c for k, c in enumerate(coeffs)})


def _random_rational(rng) -> Fraction:
    return Fraction(int(rng.integers(-20, 21)), int(rng.integers(1, 7)))


def test_shift_resultant_agrees_with_sylvester_at_random_points():
    rng = np.random.default_rng(21)
    for _ in range(25):
        t = _random_univariate(rng)
        r = shift_resultant(t)
        for _ in range(5):
            x0 = _random_rational(rng)
            assert r.evaluate([x0]) == resultant_at(t, x0), f"t = {R1.format(t)}, x0 = {x0}"


def test_shift_resultant_direction_scales_the_step():
    rng = np.random.default_rng(22)
    for _ in range(10):
        t = _random_univariate(rng)
        direction = _random_rational(rng) or Fraction(1, 3)
        r = shift_resultant(t, direction)
        for _ in range(5):
            x0 = _random_rational(rng)
            assert r.evaluate([x0]) == resultant_at(t, x0 * direction), f"t = {R1.format(t)}"

    # t = u(u + 1) and its shift by -1 share u: step 2 along -1/2
    r = shift_resultant(R1.parse("u*(u + 1)"), Fraction(-1, 2))
    assert r.evaluate([2]) == 0
    assert r.evaluate([1]) != 0


def test_shift_resultant_errors():
    with pytest.raises(ZeroPolynomial):
        shift_resultant(R1.zero())
    with pytest.raises(ZeroValue):
        shift_resultant(R1.gen("u"), Fraction(0))
    with pytest.raises(DimensionMismatch):
        shift_resultant(R2.parse("h1*h2"))


def test_univariate_gcd_is_monic():
    p = R1.parse("2*u^2 - 2")
    q = R1.parse("3*u + 3")
    assert univariate_gcd(p, q) == R1.parse("u + 1")
    assert univariate_gcd(R1.gen("u"), R1.parse("u + 1")) == R1.one()


def test_groebner_contains_one():
    h1, h2 = R2.gens()
    assert groebner_contains_one([h1, h1 + 1])
    assert not groebner_contains_one([h1 * h2, h1 + h2])
    assert groebner_contains_one([h1 - h2, h1 * h2 - 1, h2])
    assert not groebner_contains_one([])
    assert groebner_contains_one([R2.const(3)])
