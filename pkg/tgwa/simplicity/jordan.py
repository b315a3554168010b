"""
Rank one over a univariate R with sigma(u) = a u + b: R(sigma, t) is simple
iff sigma has infinite order, t != 0, R is sigma-simple and
R t + R sigma^d(t) = R for every d >= 1.
"""

from __future__ import annotations

from fractions import Fraction

from tgwa.config import parameters
from tgwa.core.datum import TGWDatum
from tgwa.errors import FamilyMismatch
from tgwa.analysis.invariant_ideals import zn_simplicity
from tgwa.analysis.verdict import Verdict, combine_all
from tgwa.simplicity.ore import ore_ideal_condition
from tgwa.simplicity.report import SimplicityReport

THEOREM = "jordan-rank-one"


def sigma_has_infinite_order(a: Fraction, b: Fraction) -> bool:
    return (a == 1 and b != 0) or a not in (1, -1)


def jordan_rank1(d: TGWDatum, d_bound: int = parameters.ORE_D_BOUND) -> SimplicityReport:
    if d.rank != 1 or d.nvars != 1:
        raise FamilyMismatch("jordan_rank1 needs rank 1 over a polynomial ring in one variable")
    sigma = d.sigma[0]
    if not sigma.is_affine():
        raise FamilyMismatch("sigma must be affine u -> a u + b")
    linear, constant = sigma.affine_parts()
    a, b = linear[0][0], constant[0]

    if sigma_has_infinite_order(a, b):
        order = Verdict.yes(f"sigma(u) = {a}*u + {b} has infinite order", a=str(a), b=str(b))
    else:
        order = Verdict.no(f"sigma(u) = {a}*u + {b} has finite order", a=str(a), b=str(b))

    t = d.t[0]
    pre = Verdict.yes("t != 0") if not t.is_zero() else Verdict.no("t = 0")
    conditions = {
        "preconditions": pre,
        "sigma_infinite_order": order,
        "zn_simple": zn_simplicity(d),
        "ore_condition": ore_ideal_condition(d, 1, d_bound).verdict(),
    }
    return SimplicityReport(combine_all(conditions), conditions, THEOREM)
