"""
Univariate tools: Sylvester resultants of a polynomial against its shift,
and monic gcds.
"""

from __future__ import annotations

from fractions import Fraction
from typing import List, Sequence

import sympy

from tgwa.arith.rational import as_rational
from tgwa.errors import DimensionMismatch, ZeroPolynomial, ZeroValue
from tgwa.poly.polynomial import Poly

_X = sympy.Symbol("x")


def sylvester_matrix(f: Sequence[Fraction], g: Sequence[Fraction]) -> sympy.Matrix:
    """Sylvester matrix of two coefficient lists given high -> low."""
    m = len(f) - 1
    n = len(g) - 1
    size = m + n
    rows: List[List[sympy.Rational]] = []
    for i in range(n):
        rows.append([0] * i + [sympy.Rational(c.numerator, c.denominator) for c in f] + [0] * (size - m - 1 - i))
    for i in range(m):
        rows.append([0] * i + [sympy.Rational(c.numerator, c.denominator) for c in g] + [0] * (size - n - 1 - i))
    return sympy.Matrix(rows)


def _shifted(coeffs: Sequence[Fraction], x0: Fraction) -> List[Fraction]:
    """Coefficients (low -> high) of t(u + x0)."""
    out = [Fraction(0)] * len(coeffs)
    for c in reversed(coeffs):
        nxt = [Fraction(0)] * len(coeffs)
        for k, a in enumerate(out):
            if a:
                nxt[k] += a * x0
                if k + 1 < len(nxt):
                    nxt[k + 1] += a
        nxt[0] += c
        out = nxt
    return out


def _univariate(t: Poly) -> List[Fraction]:
    if t.nvars > 1 and len(t.variables_used()) > 1:
        raise DimensionMismatch("shift_resultant needs a univariate polynomial")
    if t.is_zero():
        raise ZeroPolynomial("shift_resultant of the zero polynomial")
    return t.univariate_coeffs()


def resultant_at(t: Poly, x0: Fraction) -> Fraction:
    """Res_u(t(u), t(u + x0)) from the Sylvester determinant."""
    coeffs = _univariate(t)
    if len(coeffs) == 1:
        return Fraction(1)
    shifted = _shifted(coeffs, as_rational(x0))
    det = sylvester_matrix(coeffs[::-1], shifted[::-1]).det(method="bareiss")
    det = sympy.Rational(det)
    return Fraction(int(det.p), int(det.q))


def shift_resultant(t: Poly, direction: Fraction = Fraction(1)) -> Poly:
    """r(x) = Res_u(t(u), t(u + x * direction)) as a polynomial in one variable x.

    Computed by evaluating the Sylvester determinant at x = 0, 1, ..., deg(t)^2
    and interpolating. The steps d >= 1 with r(d) = 0 are exactly those where
    t and its d-fold shift along `direction` share a factor.
    """
    step = as_rational(direction)
    if step == 0:
        raise ZeroValue("shift direction must be nonzero")
    coeffs = _univariate(t)
    n = len(coeffs) - 1
    if n == 0:
        return Poly.constant(1, 1)
    points = []
    for k in range(n * n + 1):
        value = resultant_at(t, k * step)
        points.append((k, sympy.Rational(value.numerator, value.denominator)))
    expr = sympy.interpolate(points, _X)
    return Poly.from_sympy(sympy.expand(expr), (_X,))


def univariate_gcd(p: Poly, q: Poly) -> Poly:
    """Monic gcd of two polynomials in (at most) one variable."""
    if p.nvars != q.nvars:
        raise DimensionMismatch(f"{p.nvars} vs {q.nvars} variables")
    if p.nvars == 0:
        one = Poly.constant(0, 1)
        return Poly.zero(0) if p.is_zero() and q.is_zero() else one
    symbols = [sympy.Symbol(f"u{i}") for i in range(p.nvars)]
    g = sympy.gcd(
        sympy.Poly(p.to_sympy(symbols), *symbols, domain="QQ"),
        sympy.Poly(q.to_sympy(symbols), *symbols, domain="QQ"),
    )
    if g.is_zero:
        return Poly.zero(p.nvars)
    g = g.monic()
    return Poly.from_sympy(g.as_expr(), symbols)
