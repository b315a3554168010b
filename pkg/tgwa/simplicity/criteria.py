"""
Critérios de simplicidade.

Todos devolvem um SimplicityReport com as condições nomeadas
(preconditions, ore_condition, zn_simple, center_in_R). O veredito geral é a
conjunção das condições: um No com as pré-condições satisfeitas decide
NotSimple, pois os critérios são equivalências.
"""

from __future__ import annotations

import logging
from typing import Dict, List, Optional

from tgwa.config.caps import EngineCaps
from tgwa.core.datum import TGWDatum, check_consistency
from tgwa.errors import FamilyMismatch, UnknownEntries
from tgwa.analysis.center import center_contained_in_R
from tgwa.analysis.finitistic import CartanProfile, finitistic_profile, lie_type_is_A1n
from tgwa.analysis.invariant_ideals import zn_simplicity
from tgwa.analysis.kernel import kernel_of_sigma
from tgwa.analysis.verdict import Verdict, combine_all
from tgwa.simplicity.ore import ore_ideal_condition
from tgwa.simplicity.report import SimplicityReport
from tgwa.simplicity.weyl_pair import weyl_pair_certificate

logger = logging.getLogger(__name__)


def _all_ore(d: TGWDatum, d_bound: int) -> Verdict:
    per_index = {
        f"t_{i}": ore_ideal_condition(d, i, d_bound).verdict() for i in range(1, d.rank + 1)
    }
    combined = combine_all(per_index)
    if combined.is_yes:
        return Verdict.yes("R t_i + R sigma_i^d(t_i) = R for every i and every d >= 1")
    return combined


def _gates(d: TGWDatum, profile: Optional[CartanProfile]) -> List[str]:
    failures = [f"t_{i} is zero" for i, ti in enumerate(d.t, start=1) if ti.is_zero()]
    consistency = check_consistency(d)
    if not consistency.is_yes:
        failures.append(f"datum is not consistent: {consistency.message}")
    if profile is not None and not profile.all_known():
        failures.append(f"not finitistic: m_ij unknown at {profile.unknown_pairs()}")
    return failures


def _gate_report(failures: List[str], theorem: str) -> SimplicityReport:
    logger.warning("gate failure: %s", "; ".join(failures))
    pre = Verdict.no("; ".join(failures), failures=failures)
    return SimplicityReport(Verdict.unknown(*failures), {"preconditions": pre}, theorem)


def _finish(conditions: Dict[str, Verdict], theorem: str) -> SimplicityReport:
    verdict = combine_all(conditions)
    logger.info("%s: %s", theorem, verdict)
    return SimplicityReport(verdict, conditions, theorem)


def a1n_simplicity(d: TGWDatum, caps: EngineCaps | None = None) -> SimplicityReport:
    caps = caps or EngineCaps.defaults()
    profile = finitistic_profile(d, caps.finitistic_bound)
    if not profile.all_known():
        raise UnknownEntries(f"unknown m_ij at {profile.unknown_pairs()}")
    if not lie_type_is_A1n(profile):
        raise FamilyMismatch("datum is not of Lie type (A_1)^n")
    theorem = "a1n-simplicity"
    failures = _gates(d, profile)
    if failures:
        return _gate_report(failures, theorem)

    K = kernel_of_sigma(d, caps.box)
    conditions = {
        "preconditions": Verdict.yes("regularly graded, consistent and finitistic of type (A_1)^n"),
        "ore_condition": _all_ore(d, caps.d_bound),
        "zn_simple": zn_simplicity(d),
        "center_in_R": center_contained_in_R(d, K, caps.center_deg_cap, caps.coeff_cap),
    }
    return _finish(conditions, theorem)


def gwa_simplicity(d: TGWDatum, caps: EngineCaps | None = None) -> SimplicityReport:
    """Higher-rank generalized Weyl algebra: t_i regular, the ideal condition
    for all i and d, R Z^n-simple and sigma injective."""
    caps = caps or EngineCaps.defaults()
    if not d.is_gwa():
        raise FamilyMismatch("datum is not a generalized Weyl algebra (mu = 1, sigma_i(t_j) = t_j)")
    theorem = "gwa-simplicity"
    failures = _gates(d, None)
    if failures:
        return _gate_report(failures, theorem)

    K = kernel_of_sigma(d, caps.box)
    conditions = {
        "preconditions": Verdict.yes("generalized Weyl algebra with regular t_i"),
        "ore_condition": _all_ore(d, caps.d_bound),
        "zn_simple": zn_simplicity(d),
        "center_in_R": center_contained_in_R(d, K, caps.center_deg_cap, caps.coeff_cap),
    }
    return _finish(conditions, theorem)


def _condition_one(d: TGWDatum, profile: CartanProfile, caps: EngineCaps) -> Verdict:
    """A x A = A for every monic X-word x."""
    if all(ti.is_constant() for ti in d.t):
        return Verdict.yes("every t_i is a nonzero constant, so every X_i is invertible")
    if lie_type_is_A1n(profile):
        return _all_ore(d, caps.d_bound)
    weyl = weyl_pair_certificate(d, caps.weyl_degree)
    if weyl.is_yes:
        return weyl
    return Verdict.unknown(
        f"A x A = A not decided outside type (A_1)^n ({weyl.message})"
    )


def orchestrate_simplicity(d: TGWDatum, caps: EngineCaps | None = None) -> SimplicityReport:
    caps = caps or EngineCaps.defaults()
    theorem = "tgwa-simplicity"
    profile = finitistic_profile(d, caps.finitistic_bound)
    failures = _gates(d, profile)
    if failures:
        return _gate_report(failures, theorem)

    K = kernel_of_sigma(d, caps.box)
    conditions = {
        "preconditions": Verdict.yes(
            "regularly graded, consistent and finitistic", cartan=[list(r) for r in profile.cartan]
        ),
        "ore_condition": _condition_one(d, profile, caps),
        "zn_simple": zn_simplicity(d),
        "center_in_R": center_contained_in_R(d, K, caps.center_deg_cap, caps.coeff_cap),
    }
    return _finish(conditions, theorem)
