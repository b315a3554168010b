"""
Polinômios esparsos com coeficientes racionais exatos.

Um `Poly` é um mapa imutável expoente -> coeficiente não nulo sobre um número
fixo de variáveis. A ordem de impressão é graded-lex (grau total, depois
lexicográfica com a primeira variável maior).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, Iterator, List, Mapping, Sequence, Tuple, Union

import sympy

from tgwa.arith.rational import RationalLike, as_rational
from tgwa.errors import DimensionMismatch, UnknownVariable

Exponent = Tuple[int, ...]
Scalar = Union[int, Fraction]


def _grlex_key(exp: Exponent) -> Tuple[int, Exponent]:
    return (sum(exp), exp)


class Poly:
    __slots__ = ("nvars", "_terms", "_hash")

    def __init__(self, nvars: int, terms: Mapping[Exponent, RationalLike] | None = None) -> None:
        clean: Dict[Exponent, Fraction] = {}
        for exp, c in (terms or {}).items():
            if len(exp) != nvars:
                raise DimensionMismatch(f"exponent {exp} in a ring of {nvars} variables")
            c = as_rational(c)
            if c != 0:
                clean[tuple(int(e) for e in exp)] = c
        self.nvars = nvars
        self._terms = clean
        self._hash: int | None = None

    # ------------------------------------------------------------------
    # constructors
    # ------------------------------------------------------------------

    @classmethod
    def zero(cls, nvars: int) -> "Poly":
        return cls(nvars)

    @classmethod
    def constant(cls, nvars: int, c: RationalLike) -> "Poly":
        return cls(nvars, {(0,) * nvars: c})

    @classmethod
    def variable(cls, nvars: int, index: int) -> "Poly":
        exp = tuple(int(i == index) for i in range(nvars))
        return cls(nvars, {exp: 1})

    @classmethod
    def from_sympy(cls, expr: sympy.Expr, symbols: Sequence[sympy.Symbol]) -> "Poly":
        nvars = len(symbols)
        if nvars == 0:
            value = sympy.Rational(expr)
            return cls.constant(0, Fraction(int(value.p), int(value.q)))
        sp = sympy.Poly(expr, *symbols, domain="QQ")
        terms = {}
        for monom, coeff in sp.as_dict().items():
            coeff = sympy.Rational(coeff)
            terms[tuple(monom)] = Fraction(int(coeff.p), int(coeff.q))
        return cls(nvars, terms)

    # ------------------------------------------------------------------
    # inspection
    # ------------------------------------------------------------------

    def items(self) -> Iterator[Tuple[Exponent, Fraction]]:
        return iter(self._terms.items())

    def sorted_terms(self) -> List[Tuple[Exponent, Fraction]]:
        return sorted(self._terms.items(), key=lambda kv: _grlex_key(kv[0]), reverse=True)

    def coefficient(self, exp: Exponent) -> Fraction:
        return self._terms.get(tuple(exp), Fraction(0))

    def is_zero(self) -> bool:
        return not self._terms

    def is_constant(self) -> bool:
        return all(sum(e) == 0 for e in self._terms)

    def constant_value(self) -> Fraction:
        return self._terms.get((0,) * self.nvars, Fraction(0))

    @property
    def degree(self) -> int:
        """Total degree; -1 for the zero polynomial."""
        return max((sum(e) for e in self._terms), default=-1)

    def variables_used(self) -> List[int]:
        return sorted({i for e in self._terms for i, k in enumerate(e) if k})

    def homogeneous_part(self, k: int) -> "Poly":
        return Poly(self.nvars, {e: c for e, c in self._terms.items() if sum(e) == k})

    def linear_coefficients(self) -> List[Fraction]:
        """Coefficient of each variable in the degree-one part."""
        out = []
        for i in range(self.nvars):
            exp = tuple(int(i == j) for j in range(self.nvars))
            out.append(self.coefficient(exp))
        return out

    def univariate_coeffs(self) -> List[Fraction]:
        """Coefficients low -> high for a polynomial in at most one variable."""
        if self.nvars > 1 and len(self.variables_used()) > 1:
            raise DimensionMismatch("polynomial is not univariate")
        if self.is_zero():
            return []
        if self.nvars == 0:
            return [self.constant_value()]
        var = self.variables_used()[0] if self.variables_used() else 0
        out = [Fraction(0)] * (self.degree + 1)
        for e, c in self._terms.items():
            out[e[var]] = c
        return out

    # ------------------------------------------------------------------
    # arithmetic
    # ------------------------------------------------------------------

    def _coerce(self, other: object) -> "Poly":
        if isinstance(other, Poly):
            if other.nvars != self.nvars:
                raise DimensionMismatch(f"{self.nvars} vs {other.nvars} variables")
            return other
        if isinstance(other, (int, Fraction)):
            return Poly.constant(self.nvars, other)
        return NotImplemented  # type: ignore[return-value]

    def __add__(self, other: object) -> "Poly":
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        terms = dict(self._terms)
        for e, c in other._terms.items():
            terms[e] = terms.get(e, Fraction(0)) + c
        return Poly(self.nvars, terms)

    __radd__ = __add__

    def __neg__(self) -> "Poly":
        return Poly(self.nvars, {e: -c for e, c in self._terms.items()})

    def __sub__(self, other: object) -> "Poly":
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other: object) -> "Poly":
        return (-self) + other

    def __mul__(self, other: object) -> "Poly":
        if isinstance(other, (int, Fraction)):
            return Poly(self.nvars, {e: c * other for e, c in self._terms.items()})
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        terms: Dict[Exponent, Fraction] = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                terms[e] = terms.get(e, Fraction(0)) + c1 * c2
        return Poly(self.nvars, terms)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "Poly":
        if k < 0:
            raise ValueError("negative powers are not polynomials")
        result = Poly.constant(self.nvars, 1)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __eq__(self, other: object) -> bool:
        if isinstance(other, Poly):
            return self.nvars == other.nvars and self._terms == other._terms
        if isinstance(other, (int, Fraction)):
            return self.is_constant() and self.constant_value() == other
        return NotImplemented

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.nvars, frozenset(self._terms.items())))
        return self._hash

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __len__(self) -> int:
        """Number of nonzero terms."""
        return len(self._terms)

    # ------------------------------------------------------------------
    # substitution and evaluation
    # ------------------------------------------------------------------

    def substitute(self, images: Sequence["Poly"], target_nvars: int | None = None) -> "Poly":
        """Replace variable i by images[i] and expand."""
        if len(images) != self.nvars:
            raise DimensionMismatch(f"{len(images)} images for {self.nvars} variables")
        if target_nvars is None:
            target_nvars = images[0].nvars if images else 0
        powers: Dict[Tuple[int, int], Poly] = {}
        result = Poly.zero(target_nvars)
        for exp, c in self._terms.items():
            term = Poly.constant(target_nvars, c)
            for i, k in enumerate(exp):
                if k:
                    key = (i, k)
                    if key not in powers:
                        powers[key] = images[i] ** k
                    term = term * powers[key]
            result = result + term
        return result

    def evaluate(self, point: Sequence[RationalLike]) -> Fraction:
        if len(point) != self.nvars:
            raise DimensionMismatch(f"point of length {len(point)} for {self.nvars} variables")
        values = [as_rational(x) for x in point]
        total = Fraction(0)
        for exp, c in self._terms.items():
            term = c
            for v, k in zip(values, exp):
                if k:
                    term *= v**k
            total += term
        return total

    def to_sympy(self, symbols: Sequence[sympy.Symbol]) -> sympy.Expr:
        expr = sympy.Integer(0)
        for exp, c in self._terms.items():
            term = sympy.Rational(c.numerator, c.denominator)
            for s, k in zip(symbols, exp):
                if k:
                    term *= s**k
            expr += term
        return expr

    # ------------------------------------------------------------------
    # printing
    # ------------------------------------------------------------------

    def format(self, names: Sequence[str]) -> str:
        if not self._terms:
            return "0"
        out = ""
        for n, (exp, c) in enumerate(self.sorted_terms()):
            mono = "*".join(
                name if k == 1 else f"{name}^{k}" for name, k in zip(names, exp) if k
            )
            a = abs(c)
            if not mono:
                body = str(a)
            elif a == 1:
                body = mono
            else:
                body = f"{a}*{mono}"
            if n == 0:
                out = body if c > 0 else f"-{body}"
            else:
                out += f" + {body}" if c > 0 else f" - {body}"
        return out

    def __repr__(self) -> str:
        names = [f"x{i + 1}" for i in range(self.nvars)]
        return f"Poly({self.format(names)})"


@dataclass(frozen=True)
class PolyRing:
    """Q[variables]: the named coordinate ring of a datum."""

    variables: Tuple[str, ...]

    @property
    def nvars(self) -> int:
        return len(self.variables)

    def index(self, name: str) -> int:
        try:
            return self.variables.index(name)
        except ValueError:
            raise UnknownVariable(name) from None

    def zero(self) -> Poly:
        return Poly.zero(self.nvars)

    def one(self) -> Poly:
        return Poly.constant(self.nvars, 1)

    def const(self, c: RationalLike) -> Poly:
        return Poly.constant(self.nvars, c)

    def gen(self, name_or_index: Union[str, int]) -> Poly:
        i = name_or_index if isinstance(name_or_index, int) else self.index(name_or_index)
        return Poly.variable(self.nvars, i)

    def gens(self) -> List[Poly]:
        return [Poly.variable(self.nvars, i) for i in range(self.nvars)]

    def symbols(self) -> Tuple[sympy.Symbol, ...]:
        return tuple(sympy.Symbol(name) for name in self.variables)

    def parse(self, text: str) -> Poly:
        from tgwa.poly.parser import parse_poly

        return parse_poly(text, self.variables)

    def format(self, p: Poly) -> str:
        return p.format(self.variables)
