"""
Parser descendente recursivo para expressões polinomiais.

Gramática:

    expr   := ["-"] term (("+" | "-") term)*
    term   := factor ("*" factor)*
    factor := base ("^" natural)?
    base   := rational | identifier | "(" expr ")"
    rational := natural ("/" natural)?

Justaposição não é multiplicação ("2u" é erro). O parser não sabe o que um
identificador significa: um `ExpressionBackend` constrói os valores, o que
permite reaproveitá-lo para elementos da álgebra (geradores X_i, Y_i).
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Generic, List, Protocol, Sequence, TypeVar

from tgwa.errors import PolySyntaxError, UnknownVariable
from tgwa.poly.polynomial import Poly

V = TypeVar("V")

_TOKEN_RE = re.compile(r"\s*(?:(\d+)|([A-Za-z_][A-Za-z0-9_]*)|(.))")


@dataclass(frozen=True)
class Token:
    kind: str  # "num", "ident", "op", "end"
    text: str
    position: int


def tokenize(text: str) -> List[Token]:
    tokens: List[Token] = []
    pos = 0
    while pos < len(text):
        if not text[pos:].strip():
            break
        match = _TOKEN_RE.match(text, pos)
        if match is None or match.end() == pos:
            break
        num, ident, op = match.groups()
        start = match.start(match.lastindex) if match.lastindex else pos
        if num is not None:
            tokens.append(Token("num", num, start))
        elif ident is not None:
            tokens.append(Token("ident", ident, start))
        elif op is not None:
            if op not in "+-*^()/":
                raise PolySyntaxError(start, f"unexpected character {op!r}")
            tokens.append(Token("op", op, start))
        pos = match.end()
    tokens.append(Token("end", "", len(text)))
    return tokens


class ExpressionBackend(Protocol[V]):
    def constant(self, value: Fraction) -> V: ...

    def identifier(self, name: str, position: int) -> V: ...

    def add(self, a: V, b: V) -> V: ...

    def sub(self, a: V, b: V) -> V: ...

    def mul(self, a: V, b: V) -> V: ...

    def neg(self, a: V) -> V: ...

    def power(self, a: V, k: int) -> V: ...


class ExpressionParser(Generic[V]):
    def __init__(self, text: str, backend: ExpressionBackend[V]) -> None:
        self.text = text
        self.backend = backend
        self.tokens = tokenize(text)
        self.pos = 0

    # ------------------------------------------------------------------

    def _peek(self) -> Token:
        return self.tokens[self.pos]

    def _next(self) -> Token:
        tok = self.tokens[self.pos]
        self.pos += 1
        return tok

    def _expect(self, text: str) -> Token:
        tok = self._next()
        if tok.text != text or tok.kind != "op":
            raise PolySyntaxError(tok.position, f"expected {text!r}, found {tok.text or 'end of input'!r}")
        return tok

    def _is_op(self, *ops: str) -> bool:
        tok = self._peek()
        return tok.kind == "op" and tok.text in ops

    # ------------------------------------------------------------------

    def parse(self) -> V:
        if self._peek().kind == "end":
            raise PolySyntaxError(0, "empty expression")
        value = self._expr()
        tok = self._peek()
        if tok.kind != "end":
            if tok.kind in ("num", "ident") or tok.text == "(":
                raise PolySyntaxError(
                    tok.position, "juxtaposition is not multiplication; use '*'"
                )
            raise PolySyntaxError(tok.position, f"unexpected {tok.text!r}")
        return value

    def _expr(self) -> V:
        negate = False
        if self._is_op("-"):
            self._next()
            negate = True
        value = self._term()
        if negate:
            value = self.backend.neg(value)
        while self._is_op("+", "-"):
            op = self._next().text
            rhs = self._term()
            value = self.backend.add(value, rhs) if op == "+" else self.backend.sub(value, rhs)
        return value

    def _term(self) -> V:
        value = self._factor()
        while self._is_op("*"):
            self._next()
            value = self.backend.mul(value, self._factor())
        return value

    def _factor(self) -> V:
        value = self._base()
        if self._is_op("^"):
            self._next()
            tok = self._next()
            if tok.kind != "num":
                raise PolySyntaxError(tok.position, "exponent must be a natural number")
            value = self.backend.power(value, int(tok.text))
        return value

    def _base(self) -> V:
        tok = self._next()
        if tok.kind == "num":
            value = Fraction(int(tok.text))
            if self._is_op("/"):
                self._next()
                den = self._next()
                if den.kind != "num":
                    raise PolySyntaxError(den.position, "expected a denominator")
                if int(den.text) == 0:
                    raise PolySyntaxError(den.position, "zero denominator")
                value = Fraction(int(tok.text), int(den.text))
            return self.backend.constant(value)
        if tok.kind == "ident":
            return self.backend.identifier(tok.text, tok.position)
        if tok.kind == "op" and tok.text == "(":
            value = self._expr()
            self._expect(")")
            return value
        if tok.kind == "end":
            raise PolySyntaxError(tok.position, "unexpected end of input")
        raise PolySyntaxError(tok.position, f"unexpected {tok.text!r}")


class PolyBackend:
    def __init__(self, variables: Sequence[str]) -> None:
        self.variables = tuple(variables)
        self.nvars = len(self.variables)

    def constant(self, value: Fraction) -> Poly:
        return Poly.constant(self.nvars, value)

    def identifier(self, name: str, position: int) -> Poly:
        if name not in self.variables:
            raise UnknownVariable(name, position)
        return Poly.variable(self.nvars, self.variables.index(name))

    def add(self, a: Poly, b: Poly) -> Poly:
        return a + b

    def sub(self, a: Poly, b: Poly) -> Poly:
        return a - b

    def mul(self, a: Poly, b: Poly) -> Poly:
        return a * b

    def neg(self, a: Poly) -> Poly:
        return -a

    def power(self, a: Poly, k: int) -> Poly:
        return a**k


def parse_poly(text: str, variables: Sequence[str]) -> Poly:
    return ExpressionParser(text, PolyBackend(variables)).parse()
