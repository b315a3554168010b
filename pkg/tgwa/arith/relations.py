"""
Multiplicative relations among nonzero rationals.

Each value factors as sign * prod p^e_p. A product prod v_j^{g_j} equals 1
exactly when every prime exponent sums to zero and the sign exponents sum
to an even number; the parity condition gets its own auxiliary column
(sum s_j g_j - 2 z = 0), and the kernel is projected back onto g.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Dict, List, Sequence

from sympy import factorint

from tgwa.arith.lattice import Lattice, integer_kernel
from tgwa.arith.rational import RatMatrix
from tgwa.errors import ZeroValue


def _exponents(value: Fraction) -> Dict[int, int]:
    exps: Dict[int, int] = {}
    for p, e in factorint(abs(value.numerator)).items():
        exps[int(p)] = exps.get(int(p), 0) + int(e)
    for p, e in factorint(value.denominator).items():
        exps[int(p)] = exps.get(int(p), 0) - int(e)
    return {p: e for p, e in exps.items() if e != 0 and p != 1}


def multiplicative_relations(rows: Sequence[Sequence[Fraction]]) -> Lattice:
    """Basis of {g in Z^m : prod_j rows[r][j]^g_j = 1 for every row r}."""
    rows = [[Fraction(x) for x in row] for row in rows]
    if not rows:
        raise ValueError("at least one row of values is required")
    m = len(rows[0])
    for row in rows:
        if len(row) != m:
            raise ValueError("all rows must have the same length")
        for j, v in enumerate(row):
            if v == 0:
                raise ZeroValue(f"value at position {j + 1} is zero")

    width = m + len(rows)
    equations: List[List[int]] = []
    for r, row in enumerate(rows):
        factored = [_exponents(v) for v in row]
        primes = sorted(set().union(*factored)) if factored else []
        for p in primes:
            equations.append([f.get(p, 0) for f in factored] + [0] * len(rows))
        parity = [1 if v < 0 else 0 for v in row] + [0] * len(rows)
        parity[m + r] = -2
        equations.append(parity)

    kernel = integer_kernel(RatMatrix(equations, cols=width))
    return kernel.project(m)


def rational_mult_relations(values: Sequence[Fraction]) -> Lattice:
    """Basis of {g in Z^m : prod_j values_j^g_j = 1}."""
    return multiplicative_relations([list(values)])
