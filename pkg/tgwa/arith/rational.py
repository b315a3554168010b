"""
Aritmética racional exata e álgebra linear sobre Q.

Os números são `fractions.Fraction` (sempre reduzidos, denominador positivo,
zero canônico 0/1). As matrizes guardam as entradas num `numpy.ndarray` de
dtype=object, de modo que nenhuma conta passa por ponto flutuante.
"""

from __future__ import annotations

import re
from fractions import Fraction
from math import lcm
from typing import Iterable, List, Sequence, Tuple, Union

import numpy as np

Rational = Fraction
RationalLike = Union[int, Fraction, str]

_RATIONAL_RE = re.compile(r"^\s*([+-]?\d+)\s*(?:/\s*(\d+))?\s*$")


def parse_rational(text: str) -> Fraction:
    """Parse "p" or "p/q" with an optional sign."""
    match = _RATIONAL_RE.match(text)
    if match is None:
        raise ValueError(f"not a rational number: {text!r}")
    num = int(match.group(1))
    den = int(match.group(2)) if match.group(2) is not None else 1
    if den == 0:
        raise ValueError(f"zero denominator in {text!r}")
    return Fraction(num, den)


def as_rational(value: RationalLike) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return parse_rational(value)
    raise TypeError(f"cannot convert {type(value).__name__} to a rational")


def format_rational(value: Fraction) -> str:
    return str(value)


# ----------------------------------------------------------------------
# Fraction-free elimination
# ----------------------------------------------------------------------


def _integer_rows(rows: Sequence[Sequence[Fraction]]) -> List[List[int]]:
    """Scale every row by the lcm of its denominators."""
    out = []
    for row in rows:
        scale = lcm(1, *(Fraction(x).denominator for x in row))
        out.append([int(Fraction(x) * scale) for x in row])
    return out


def _bareiss_echelon(rows: List[List[int]], ncols: int) -> Tuple[List[List[int]], List[int]]:
    """Row echelon form by Bareiss elimination; returns (rows, pivot columns).

    Every division is exact: after each step the entries are minors of the
    (row-permuted) input.
    """
    a = [list(r) for r in rows]
    m = len(a)
    prev = 1
    r = 0
    pivots: List[int] = []
    for c in range(ncols):
        if r == m:
            break
        p = next((i for i in range(r, m) if a[i][c] != 0), None)
        if p is None:
            continue
        a[r], a[p] = a[p], a[r]
        piv = a[r][c]
        for i in range(r + 1, m):
            lead = a[i][c]
            for j in range(c + 1, ncols):
                a[i][j] = (piv * a[i][j] - lead * a[r][j]) // prev
            a[i][c] = 0
        prev = piv
        pivots.append(c)
        r += 1
    return a[:r], pivots


class RatMatrix:
    """Rectangular matrix of rationals backed by an object ndarray."""

    def __init__(self, entries: Iterable[Iterable[RationalLike]], cols: int | None = None) -> None:
        rows = [[as_rational(x) for x in row] for row in entries]
        if cols is None:
            cols = len(rows[0]) if rows else 0
        if any(len(row) != cols for row in rows):
            raise ValueError("RatMatrix rows must all have the same length")
        self._cols = cols
        self.entries = np.empty((len(rows), cols), dtype=object)
        for i, row in enumerate(rows):
            for j, x in enumerate(row):
                self.entries[i, j] = x

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "RatMatrix":
        return cls([[Fraction(0)] * cols for _ in range(rows)], cols=cols)

    @property
    def rows(self) -> int:
        return self.entries.shape[0]

    @property
    def cols(self) -> int:
        return self._cols

    def __getitem__(self, index: Tuple[int, int]) -> Fraction:
        return self.entries[index]

    def row_list(self) -> List[List[Fraction]]:
        return [list(self.entries[i, :]) for i in range(self.rows)]

    def transpose(self) -> "RatMatrix":
        return RatMatrix([list(self.entries[:, j]) for j in range(self.cols)], cols=self.rows)

    def mul_vector(self, v: Sequence[RationalLike]) -> List[Fraction]:
        if len(v) != self.cols:
            raise ValueError(f"vector of length {len(v)} for {self.cols} columns")
        if self.cols == 0:
            return [Fraction(0)] * self.rows
        vec = np.empty(self.cols, dtype=object)
        vec[:] = [as_rational(x) for x in v]
        return [Fraction(x) for x in self.entries.dot(vec)]

    def rank(self) -> int:
        if self.rows == 0 or self.cols == 0:
            return 0
        _, pivots = _bareiss_echelon(_integer_rows(self.row_list()), self.cols)
        return len(pivots)

    def rref(self) -> Tuple[List[List[Fraction]], List[int]]:
        """Reduced row echelon form over Q (zero rows dropped)."""
        if self.rows == 0 or self.cols == 0:
            return [], []
        ech, pivots = _bareiss_echelon(_integer_rows(self.row_list()), self.cols)
        red = [[Fraction(x) for x in row] for row in ech]
        for k in range(len(pivots) - 1, -1, -1):
            c = pivots[k]
            piv = red[k][c]
            red[k] = [x / piv for x in red[k]]
            for i in range(k):
                f = red[i][c]
                if f:
                    red[i] = [a - f * b for a, b in zip(red[i], red[k])]
        return red, pivots

    def nullspace(self) -> List[List[Fraction]]:
        """Basis of {v in Q^cols : M v = 0}, one vector per free column."""
        red, pivots = self.rref()
        free = [c for c in range(self.cols) if c not in pivots]
        basis = []
        for f in free:
            v = [Fraction(0)] * self.cols
            v[f] = Fraction(1)
            for k, c in enumerate(pivots):
                v[c] = -red[k][f]
            basis.append(v)
        return basis

    def __repr__(self) -> str:
        body = "; ".join(" ".join(str(x) for x in row) for row in self.row_list())
        return f"RatMatrix({self.rows}x{self.cols}: {body})"
