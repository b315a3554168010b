"""
Elements of the TGW construction: finite sums r * m with left coefficients
r in R and reduced monomials m.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Dict, Iterator, Mapping, Sequence, Tuple

from tgwa.core.words import EMPTY, DegVec, RedWord
from tgwa.poly.polynomial import Poly


class Element:
    __slots__ = ("nvars", "_terms")

    def __init__(self, nvars: int, terms: Mapping[RedWord, Poly] | None = None) -> None:
        self.nvars = nvars
        self._terms: Dict[RedWord, Poly] = {
            w: c for w, c in (terms or {}).items() if not c.is_zero()
        }

    @classmethod
    def zero(cls, nvars: int) -> "Element":
        return cls(nvars)

    @classmethod
    def scalar(cls, r: Poly) -> "Element":
        return cls(r.nvars, {EMPTY: r})

    @classmethod
    def monomial(cls, w: RedWord, r: Poly) -> "Element":
        return cls(r.nvars, {w: r})

    def items(self) -> Iterator[Tuple[RedWord, Poly]]:
        return iter(sorted(self._terms.items()))

    def coefficient(self, w: RedWord) -> Poly:
        return self._terms.get(w, Poly.zero(self.nvars))

    def words(self) -> Sequence[RedWord]:
        return sorted(self._terms)

    def is_trivial(self) -> bool:
        """No stored terms (zero as a representative, hence zero in A)."""
        return not self._terms

    def __len__(self) -> int:
        return len(self._terms)

    def __add__(self, other: "Element") -> "Element":
        terms = dict(self._terms)
        for w, c in other._terms.items():
            terms[w] = terms[w] + c if w in terms else c
        return Element(self.nvars, terms)

    def __neg__(self) -> "Element":
        return Element(self.nvars, {w: -c for w, c in self._terms.items()})

    def __sub__(self, other: "Element") -> "Element":
        return self + (-other)

    def scale(self, c: int | Fraction) -> "Element":
        return Element(self.nvars, {w: p * c for w, p in self._terms.items()})

    def left_mul(self, r: Poly) -> "Element":
        return Element(self.nvars, {w: r * p for w, p in self._terms.items()})

    def homogeneous_components(self, n: int) -> Dict[DegVec, "Element"]:
        parts: Dict[DegVec, Dict[RedWord, Poly]] = {}
        for w, c in self._terms.items():
            parts.setdefault(w.degree(n), {})[w] = c
        return {g: Element(self.nvars, t) for g, t in sorted(parts.items())}

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Element):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        return hash(frozenset(self._terms.items()))

    def format(self, names: Sequence[str]) -> str:
        if not self._terms:
            return "0"
        parts = []
        for w, c in self.items():
            if w.is_empty():
                parts.append(c.format(names) if len(c) == 1 else f"({c.format(names)})")
                continue
            if c == 1:
                parts.append(str(w))
            elif c == -1:
                parts.append(f"-{w}")
            elif len(c) == 1:
                parts.append(f"{c.format(names)}*{w}")
            else:
                parts.append(f"({c.format(names)})*{w}")
        out = parts[0]
        for p in parts[1:]:
            out += f" - {p[1:]}" if p.startswith("-") else f" + {p}"
        return out

    def __repr__(self) -> str:
        names = [f"x{i + 1}" for i in range(self.nvars)]
        return f"Element({self.format(names)})"
