"""
Expressões de elementos: a gramática polinomial com os geradores X1..Xn e
Y1..Yn. O produto é não comutativo e avaliado da esquerda para a direita.
"""

from __future__ import annotations

import re
from fractions import Fraction

from tgwa.core.algebra import TGWAlgebra
from tgwa.core.element import Element
from tgwa.errors import UnknownVariable
from tgwa.poly.parser import ExpressionParser

_GENERATOR_RE = re.compile(r"^([XY])(\d+)$")


class ElementBackend:
    def __init__(self, algebra: TGWAlgebra) -> None:
        self.algebra = algebra
        self.ring = algebra.datum.ring

    def constant(self, value: Fraction) -> Element:
        return self.algebra.scalar(self.ring.const(value))

    def identifier(self, name: str, position: int) -> Element:
        match = _GENERATOR_RE.match(name)
        if match is not None and 1 <= int(match.group(2)) <= self.algebra.n:
            return self.algebra.generator(match.group(1), int(match.group(2)))
        if name in self.ring.variables:
            return self.algebra.scalar(self.ring.gen(name))
        raise UnknownVariable(name, position)

    def add(self, a: Element, b: Element) -> Element:
        return a + b

    def sub(self, a: Element, b: Element) -> Element:
        return a - b

    def mul(self, a: Element, b: Element) -> Element:
        return self.algebra.multiply(a, b)

    def neg(self, a: Element) -> Element:
        return -a

    def power(self, a: Element, k: int) -> Element:
        return self.algebra.power(a, k)


def parse_element(algebra: TGWAlgebra, text: str) -> Element:
    return ExpressionParser(text, ElementBackend(algebra)).parse()
