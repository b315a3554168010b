"""
Condição R t_i + R sigma_i^d(t_i) = R.

Para cada d em 1..d_bound o teste é direto (mdc univariado ou base de
Gröbner). Quando t_i é um polinômio em uma forma linear l e sigma_i(l) = l + b
com b constante não nula, o resultante Res(t(s), t(s + x b)) decide todos os d
de uma vez: a condição falha em d exatamente quando d é raiz.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, List, Optional, Tuple

import sympy

from tgwa.arith.roots import rational_roots
from tgwa.core.datum import TGWDatum
from tgwa.errors import InternalInvariantError
from tgwa.analysis.verdict import Verdict
from tgwa.poly.endo import Endo
from tgwa.poly.groebner import groebner_contains_one
from tgwa.poly.polynomial import Poly
from tgwa.poly.univariate import shift_resultant, univariate_gcd

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class OreConditionResult:
    index: int
    per_d: Tuple[Tuple[int, bool], ...]
    all_d_certificate: bool = False
    witness_d: Optional[int] = None
    ideal: Optional[str] = None
    method: str = "per-d"

    def holds_up_to_bound(self) -> bool:
        return all(ok for _, ok in self.per_d)

    def verdict(self) -> Verdict:
        if self.witness_d is not None:
            d = self.witness_d
            shifted = "σt" if d == 1 else f"σ^{d}t"
            text = f"witness d={d}: ideal (t, {shifted})"
            text += f" = {self.ideal}" if self.ideal else " is proper"
            return Verdict.no(text, index=self.index, witness_d=d, ideal=self.ideal, method=self.method)
        if self.all_d_certificate:
            return Verdict.yes(
                f"R t_{self.index} + R sigma_{self.index}^d(t_{self.index}) = R for all d >= 1",
                index=self.index,
                method=self.method,
            )
        bound = self.per_d[-1][0] if self.per_d else 0
        return Verdict.unknown(
            f"condition holds for d <= {bound} but no all-d certificate for index {self.index}",
            index=self.index,
        )

    def as_dict(self) -> Dict[str, object]:
        return {
            "index": self.index,
            "all_d_certificate": self.all_d_certificate,
            "witness_d": self.witness_d,
            "ideal": self.ideal,
            "method": self.method,
            "checked_up_to": self.per_d[-1][0] if self.per_d else 0,
        }


@dataclass(frozen=True)
class _LinearForm:
    ell: Poly  # forma linear homogênea, coeficiente 1 na variável pivô
    pivot: int
    profile: Poly  # t como polinômio na variável pivô (representando l)
    shift: Fraction


def _linear_form(d: TGWDatum, t: Poly, sigma: Endo) -> Optional[_LinearForm]:
    n = t.degree
    if n < 1:
        return None
    symbols = d.ring.symbols()
    _, factors = sympy.factor_list(t.homogeneous_part(n).to_sympy(symbols), *symbols)
    if len(factors) != 1 or factors[0][1] != n:
        return None
    ell = Poly.from_sympy(factors[0][0], symbols)
    if ell.degree != 1 or ell.constant_value() != 0:
        return None

    coeffs = ell.linear_coefficients()
    pivot = next(k for k, c in enumerate(coeffs) if c != 0)
    ell = ell * (1 / coeffs[pivot])
    coeffs = ell.linear_coefficients()

    nv = d.nvars
    gens = [Poly.variable(nv, k) for k in range(nv)]
    images = list(gens)
    images[pivot] = gens[pivot] - sum(
        (gens[k] * coeffs[k] for k in range(nv) if k != pivot), Poly.zero(nv)
    )
    profile = t.substitute(images, nv)
    if any(k != pivot for k in profile.variables_used()):
        return None

    shift = sigma.apply(ell) - ell
    if not shift.is_constant() or shift.constant_value() == 0:
        return None
    return _LinearForm(ell, pivot, profile, shift.constant_value())


def _shifted_profile(form: _LinearForm, amount: Fraction) -> Poly:
    nv = form.profile.nvars
    images = [Poly.variable(nv, k) for k in range(nv)]
    images[form.pivot] = images[form.pivot] + amount
    return form.profile.substitute(images, nv)


def _in_original_coordinates(form: _LinearForm, p: Poly) -> Poly:
    nv = p.nvars
    images = [Poly.variable(nv, k) for k in range(nv)]
    images[form.pivot] = form.ell
    return p.substitute(images, nv)


def _check_d(t: Poly, shifted: Poly) -> Tuple[bool, Optional[Poly]]:
    used = set(t.variables_used()) | set(shifted.variables_used())
    if len(used) <= 1:
        g = univariate_gcd(t, shifted)
        return g.is_constant(), g
    return groebner_contains_one([t, shifted]), None


def ore_ideal_condition(d: TGWDatum, i: int, d_bound: int = 25) -> OreConditionResult:
    """i is 1-based."""
    t = d.t[i - 1]
    sigma = d.sigma[i - 1]
    if t.is_constant():
        return OreConditionResult(
            i, tuple((k, True) for k in range(1, d_bound + 1)), True, method="unit"
        )

    per_d: List[Tuple[int, bool]] = []
    gcds: Dict[int, Optional[Poly]] = {}
    shifted = t
    for k in range(1, d_bound + 1):
        shifted = sigma.apply(shifted)
        ok, g = _check_d(t, shifted)
        per_d.append((k, ok))
        gcds[k] = g
    first_failure = next((k for k, ok in per_d if not ok), None)

    form = _linear_form(d, t, sigma)
    if form is None:
        logger.debug("t_%d: no linear form with a constant shift, per-d checks only", i)
        ideal = None
        if first_failure is not None and gcds[first_failure] is not None:
            ideal = f"({d.fmt(gcds[first_failure])})"
        return OreConditionResult(i, tuple(per_d), False, first_failure, ideal)

    r = shift_resultant(form.profile, form.shift)
    steps = sorted(
        int(rho)
        for rho in (rational_roots(r) if not r.is_constant() else [])
        if rho.denominator == 1 and rho >= 1
    )
    witness = steps[0] if steps else None
    logger.debug("t_%d: resultant %s, witness %s", i, r, witness)

    if witness is None and first_failure is not None:
        raise InternalInvariantError(
            f"resultant certifies every d for t_{i} but d={first_failure} fails directly"
        )
    if witness is not None and witness <= d_bound and first_failure != witness:
        raise InternalInvariantError(
            f"resultant witness d={witness} for t_{i} disagrees with direct check ({first_failure})"
        )
    if witness is not None and witness > d_bound and first_failure is not None:
        raise InternalInvariantError(
            f"direct check fails at d={first_failure} below resultant witness {witness}"
        )

    if witness is None:
        return OreConditionResult(i, tuple(per_d), True, method="resultant")
    g = univariate_gcd(form.profile, _shifted_profile(form, witness * form.shift))
    ideal = f"({d.fmt(_in_original_coordinates(form, g))})"
    return OreConditionResult(i, tuple(per_d), False, witness, ideal, method="resultant")
