"""
Rational roots of univariate polynomials (rational root theorem).
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd, lcm
from typing import List, Sequence, TYPE_CHECKING

from sympy import divisors

from tgwa.errors import ZeroPolynomial

if TYPE_CHECKING:
    from tgwa.poly.polynomial import Poly


def _horner(coeffs: Sequence[int], x: Fraction) -> Fraction:
    acc = Fraction(0)
    for c in reversed(coeffs):
        acc = acc * x + c
    return acc


def rational_roots_of_coeffs(coeffs: Sequence[Fraction]) -> List[Fraction]:
    """Distinct rational roots of sum coeffs[k] u^k, sorted ascending."""
    coeffs = [Fraction(c) for c in coeffs]
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
    if not coeffs:
        raise ZeroPolynomial("rational_roots of the zero polynomial")

    roots: set[Fraction] = set()
    shift = 0
    while coeffs[shift] == 0:
        shift += 1
    if shift:
        roots.add(Fraction(0))
    coeffs = coeffs[shift:]

    scale = lcm(1, *(c.denominator for c in coeffs))
    ints = [int(c * scale) for c in coeffs]
    content = 0
    for c in ints:
        content = gcd(content, c)
    ints = [c // content for c in ints]

    if len(ints) > 1:
        for p in divisors(abs(ints[0])):
            for q in divisors(abs(ints[-1])):
                for cand in (Fraction(p, q), Fraction(-p, q)):
                    if _horner(ints, cand) == 0:
                        roots.add(cand)
    return sorted(roots)


def rational_roots(p: "Poly") -> List[Fraction]:
    """Rational roots of a univariate Poly, multiplicity ignored."""
    if p.is_zero():
        raise ZeroPolynomial("rational_roots of the zero polynomial")
    return rational_roots_of_coeffs(p.univariate_coeffs())
