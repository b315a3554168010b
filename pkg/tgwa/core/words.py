"""
Palavras nos geradores X_i, Y_i e monômios reduzidos Y...Y X...X.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from typing import List, Literal, Sequence, Tuple

from sympy.utilities.iterables import multiset_permutations

from tgwa.config import parameters
from tgwa.errors import DegreeTooLarge

LetterKind = Literal["X", "Y"]
Letter = Tuple[LetterKind, int]  # índice 1-based
Word = Tuple[Letter, ...]
DegVec = Tuple[int, ...]


def zero_degree(n: int) -> DegVec:
    return (0,) * n


def add_degrees(a: DegVec, b: DegVec) -> DegVec:
    return tuple(x + y for x, y in zip(a, b))


def neg_degree(a: DegVec) -> DegVec:
    return tuple(-x for x in a)


def unit_degree(n: int, i: int, sign: int = 1) -> DegVec:
    """sign * e_i for a 1-based index i."""
    return tuple(sign if k == i - 1 else 0 for k in range(n))


def letter_degree(letter: Letter, n: int) -> DegVec:
    kind, i = letter
    return unit_degree(n, i, 1 if kind == "X" else -1)


def word_degree(word: Sequence[Letter], n: int) -> DegVec:
    deg = [0] * n
    for kind, i in word:
        deg[i - 1] += 1 if kind == "X" else -1
    return tuple(deg)


def format_word(word: Sequence[Letter]) -> str:
    if not word:
        return "1"
    return "*".join(f"{kind}{i}" for kind, i in word)


@dataclass(frozen=True, order=True)
class RedWord:
    """Y_{i_1}...Y_{i_k} X_{j_1}...X_{j_l} with disjoint index sets."""

    y_part: Tuple[int, ...] = ()
    x_part: Tuple[int, ...] = ()

    def __post_init__(self) -> None:
        if set(self.y_part) & set(self.x_part):
            raise ValueError(f"not reduced: Y indices {self.y_part}, X indices {self.x_part}")

    def is_empty(self) -> bool:
        return not self.y_part and not self.x_part

    def word(self) -> Word:
        return tuple(("Y", i) for i in self.y_part) + tuple(("X", j) for j in self.x_part)

    def degree(self, n: int) -> DegVec:
        return word_degree(self.word(), n)

    def __str__(self) -> str:
        return format_word(self.word())


EMPTY = RedWord()


def reduced_monomials_of_degree(g: DegVec, deg_cap: int = parameters.DEG_CAP) -> List[RedWord]:
    """Every reduced monomial of degree g, in lexicographic enumeration order."""
    size = sum(abs(x) for x in g)
    if size > deg_cap:
        raise DegreeTooLarge(tuple(g), deg_cap)
    ys = [i + 1 for i, x in enumerate(g) for _ in range(-x) if x < 0]
    xs = [i + 1 for i, x in enumerate(g) for _ in range(x) if x > 0]
    y_orders = [tuple(p) for p in multiset_permutations(ys)] if ys else [()]
    x_orders = [tuple(p) for p in multiset_permutations(xs)] if xs else [()]
    return [RedWord(y, x) for y, x in product(y_orders, x_orders)]
