"""
O dado TGW (R, sigma, t, mu), sua validação e as condições de consistência.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, List, Tuple

from tgwa.analysis.verdict import Verdict
from tgwa.poly.endo import Endo, FamilyTag, endos_commute, family_problems, is_automorphism_pair
from tgwa.poly.polynomial import Poly, PolyRing

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class TGWDatum:
    name: str
    ring: PolyRing
    sigma: Tuple[Endo, ...]
    t: Tuple[Poly, ...]
    mu: Tuple[Tuple[Fraction, ...], ...]
    family: FamilyTag = "generic"
    description: str = ""

    @property
    def rank(self) -> int:
        return len(self.sigma)

    @property
    def nvars(self) -> int:
        return self.ring.nvars

    def fmt(self, p: Poly) -> str:
        return p.format(self.ring.variables)

    def is_gwa(self) -> bool:
        """mu == 1 off the diagonal and sigma_i(t_j) = t_j for all i != j."""
        n = self.rank
        for i in range(n):
            for j in range(n):
                if i == j:
                    continue
                if self.mu[i][j] != 1 or self.sigma[i].apply(self.t[j]) != self.t[j]:
                    return False
        return True


@dataclass
class ValidationReport:
    problems: List[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.problems

    def as_dict(self) -> Dict[str, object]:
        return {"valid": self.ok, "problems": list(self.problems)}


def validate_datum(d: TGWDatum) -> ValidationReport:
    """Check every standing assumption; collect all failures."""
    report = ValidationReport()
    n = d.rank
    nv = d.nvars

    if len(d.t) != n:
        report.problems.append(f"expected {n} elements t, found {len(d.t)}")
    if len(d.mu) != n or any(len(row) != n for row in d.mu):
        report.problems.append(f"mu must be a {n}x{n} matrix")
    if report.problems:
        return report

    for i, e in enumerate(d.sigma, start=1):
        if e.nvars != nv:
            report.problems.append(f"sigma_{i} acts on {e.nvars} variables, ring has {nv}")
    for i, p in enumerate(d.t, start=1):
        if p.nvars != nv:
            report.problems.append(f"t_{i} lives in {p.nvars} variables, ring has {nv}")
    if report.problems:
        return report

    for i, e in enumerate(d.sigma, start=1):
        if not is_automorphism_pair(e):
            report.problems.append(f"sigma_{i} and its declared inverse are not an automorphism pair")
    for i in range(n):
        for j in range(i + 1, n):
            if not endos_commute(d.sigma[i], d.sigma[j]):
                report.problems.append(f"sigma_{i + 1} and sigma_{j + 1} do not commute")
    for i, p in enumerate(d.t, start=1):
        if p.is_zero():
            report.problems.append(f"t_{i} is zero")
    for i in range(n):
        for j in range(n):
            if i == j and d.mu[i][j] != 1:
                report.problems.append(f"mu[{i + 1}][{j + 1}] must be 1")
            elif i != j and d.mu[i][j] == 0:
                report.problems.append(f"mu[{i + 1}][{j + 1}] not invertible")
    report.problems.extend(family_problems(d.family, d.sigma, d.ring.variables))

    if report.ok:
        logger.debug("datum %s is valid and regularly graded", d.name)
    return report


def check_consistency(d: TGWDatum) -> Verdict:
    """Both consistency conditions; the first failure is the witness."""
    n = d.rank
    s, t = d.sigma, d.t
    for i in range(n):
        for j in range(n):
            if i == j:
                continue
            lhs = s[i].apply(s[j].apply(t[i] * t[j]))
            rhs = s[i].apply(t[i]) * s[j].apply(t[j]) * (d.mu[i][j] * d.mu[j][i])
            if lhs != rhs:
                return Verdict.no(
                    f"sigma_{i + 1}sigma_{j + 1}(t_{i + 1}t_{j + 1}) = {d.fmt(lhs)} but "
                    f"mu_{i + 1}{j + 1}mu_{j + 1}{i + 1}sigma_{i + 1}(t_{i + 1})sigma_{j + 1}(t_{j + 1}) = {d.fmt(rhs)}",
                    indices=[i + 1, j + 1],
                    lhs=d.fmt(lhs),
                    rhs=d.fmt(rhs),
                )
    for i in range(n):
        for j in range(n):
            for k in range(n):
                if len({i, j, k}) < 3:
                    continue
                lhs = t[j] * s[i].apply(s[k].apply(t[j]))
                rhs = s[i].apply(t[j]) * s[k].apply(t[j])
                if lhs != rhs:
                    return Verdict.no(
                        f"t_{j + 1}sigma_{i + 1}sigma_{k + 1}(t_{j + 1}) = {d.fmt(lhs)} but "
                        f"sigma_{i + 1}(t_{j + 1})sigma_{k + 1}(t_{j + 1}) = {d.fmt(rhs)}",
                        indices=[i + 1, j + 1, k + 1],
                        lhs=d.fmt(lhs),
                        rhs=d.fmt(rhs),
                    )
    return Verdict.yes("consistency conditions hold for all index pairs and triples")
