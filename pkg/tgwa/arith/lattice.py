"""
Integer lattices: Hermite normal form and integer kernels.

Row operations run on numpy object arrays so entries stay Python integers.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, List, Sequence, Tuple

import numpy as np

from tgwa.arith.rational import RatMatrix, _integer_rows

IntVector = Tuple[int, ...]


def _as_int_array(rows: Sequence[Sequence[int]], ncols: int) -> np.ndarray:
    a = np.zeros((len(rows), ncols), dtype=object)
    for i, row in enumerate(rows):
        if len(row) != ncols:
            raise ValueError(f"row {i} has length {len(row)}, expected {ncols}")
        for j, x in enumerate(row):
            a[i, j] = int(x)
    return a


def _echelon(a: np.ndarray, pivot_cols: int) -> int:
    """Integer row echelon form in place over the first `pivot_cols` columns.

    Only unimodular row operations are used (swaps, negation, adding integer
    multiples). Pivots are positive and the entries above each pivot are
    reduced into [0, pivot). Returns the number of pivot rows.
    """
    m = a.shape[0]
    r = 0
    for c in range(pivot_cols):
        if r == m:
            break
        while True:
            nonzero = [i for i in range(r, m) if a[i, c] != 0]
            if not nonzero:
                break
            p = min(nonzero, key=lambda i: abs(a[i, c]))
            if p != r:
                a[[r, p]] = a[[p, r]]
            finished = True
            for i in range(r + 1, m):
                if a[i, c] != 0:
                    a[i] -= (a[i, c] // a[r, c]) * a[r]
                    if a[i, c] != 0:
                        finished = False
            if finished:
                break
        if a[r, c] == 0:
            continue
        if a[r, c] < 0:
            a[r] = -a[r]
        for i in range(r):
            a[i] -= (a[i, c] // a[r, c]) * a[r]
        r += 1
    return r


def hermite_normal_form(rows: Iterable[Sequence[int]], ncols: int) -> List[IntVector]:
    """Row-style HNF of the lattice spanned by `rows` (zero rows dropped)."""
    rows = [list(r) for r in rows]
    if not rows:
        return []
    a = _as_int_array(rows, ncols)
    rank = _echelon(a, ncols)
    return [tuple(int(x) for x in a[i]) for i in range(rank)]


@dataclass(frozen=True)
class Lattice:
    """Subgroup of Z^ambient_rank, stored by its Hermite basis.

    Construction normalizes the generators, so `==` is lattice equality.
    """

    ambient_rank: int
    basis: Tuple[IntVector, ...] = ()

    def __post_init__(self) -> None:
        hnf = hermite_normal_form(self.basis, self.ambient_rank)
        object.__setattr__(self, "basis", tuple(hnf))

    @classmethod
    def zero(cls, n: int) -> "Lattice":
        return cls(n, ())

    @classmethod
    def full(cls, n: int) -> "Lattice":
        return cls(n, tuple(tuple(int(i == j) for j in range(n)) for i in range(n)))

    @property
    def rank(self) -> int:
        return len(self.basis)

    def is_zero(self) -> bool:
        return not self.basis

    def hermite_basis(self) -> List[IntVector]:
        return list(self.basis)

    def contains(self, v: Sequence[int]) -> bool:
        if len(v) != self.ambient_rank:
            return False
        return Lattice(self.ambient_rank, self.basis + (tuple(int(x) for x in v),)) == self

    def project(self, k: int) -> "Lattice":
        """Image under the projection onto the first k coordinates."""
        return Lattice(k, tuple(v[:k] for v in self.basis))

    def as_lists(self) -> List[List[int]]:
        return [list(v) for v in self.basis]

    def __str__(self) -> str:
        if not self.basis:
            return "{0}"
        return "{" + ", ".join("(" + ",".join(str(x) for x in v) + ")" for v in self.basis) + "}"


def integer_kernel(m: RatMatrix) -> Lattice:
    """Basis of {g in Z^cols : M g = 0}.

    Denominators are cleared row by row, then the transposed matrix is
    brought to echelon form while an identity block records the unimodular
    column transform; rows whose left part vanishes span the kernel.
    """
    n = m.cols
    if n == 0:
        return Lattice.zero(0)
    ints = _integer_rows(m.row_list())
    r = len(ints)
    a = np.zeros((n, r + n), dtype=object)
    for j in range(n):
        for i in range(r):
            a[j, i] = ints[i][j]
        a[j, r + j] = 1
    rank = _echelon(a, r)
    kernel = [tuple(int(x) for x in a[i, r:]) for i in range(rank, n)]
    return Lattice(n, tuple(kernel))
