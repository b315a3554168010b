"""
Sergeev family S(f_1, ..., f_{n+1}) attached to sl(n+1).

R = Q[h_1, ..., h_n], sigma_i(h_j) = h_j - delta_ij, mu = 1 and

    t_1 = f_1(h_1) f_2(h_2 - h_1)
    t_k = f_k(h_k - h_{k-1} + 1) f_{k+1}(h_{k+1} - h_k)     1 < k < n
    t_n = f_n(h_n - h_{n-1} + 1) f_{n+1}(h_n)

For n = 1 the single element is t_1 = f_1(h_1) f_2(h_1).
"""

from __future__ import annotations

from fractions import Fraction
from typing import List, Sequence

from tgwa.core.datum import TGWDatum
from tgwa.errors import DimensionMismatch
from tgwa.poly.endo import Endo
from tgwa.poly.polynomial import Poly, PolyRing


def _compose(f: Poly, arg: Poly) -> Poly:
    """f(arg) for a univariate f."""
    return f.substitute([arg] * f.nvars, arg.nvars)


def build_sergeev(fs: Sequence[Poly], name: str = "") -> TGWDatum:
    """Datum S(f_1, ..., f_{n+1}); each f_k is a polynomial in one variable."""
    if len(fs) < 2:
        raise DimensionMismatch("need at least two polynomials f_1, f_2")
    for f in fs:
        if f.nvars > 1:
            raise DimensionMismatch("each f_k must be univariate")
    n = len(fs) - 1
    ring = PolyRing(tuple(f"h{i}" for i in range(1, n + 1)))
    h = ring.gens()

    sigma: List[Endo] = []
    for i in range(n):
        images = tuple(h[j] - 1 if j == i else h[j] for j in range(n))
        inverse = tuple(h[j] + 1 if j == i else h[j] for j in range(n))
        sigma.append(Endo(images, inverse))

    t: List[Poly] = []
    for k in range(1, n + 1):
        if k == 1:
            left = h[0]
        else:
            left = h[k - 1] - h[k - 2] + 1
        right = h[k] - h[k - 1] if k < n else h[n - 1]
        t.append(_compose(fs[k - 1], left) * _compose(fs[k], right))

    mu = tuple(tuple(Fraction(1) for _ in range(n)) for _ in range(n))
    return TGWDatum(
        name=name or f"sergeev_{n + 1}",
        ring=ring,
        sigma=tuple(sigma),
        t=tuple(t),
        mu=mu,
        family="translation",
        description=f"Sergeev datum S(f_1, ..., f_{n + 1}) for sl({n + 1})",
    )
