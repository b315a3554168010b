"""
Comandos da CLI. Cada comando recebe os argumentos já lidos e os limites em
vigor, e devolve um `CommandResult` com o texto para o usuário, o conteúdo do
relatório JSON e se o resultado ficou decidido (exit 0) ou não (exit 2).
"""

from __future__ import annotations

import argparse
import json
import logging
from dataclasses import dataclass, field
from pathlib import Path
from typing import Callable, Dict, List, Tuple

from tgwa.analysis.center import center_contained_in_R
from tgwa.analysis.centralizer import centralizer_commutative, r_maximal_commutative
from tgwa.analysis.finitistic import finitistic_profile, lie_type_is_A1n
from tgwa.analysis.invariant_ideals import zn_simplicity
from tgwa.analysis.kernel import kernel_of_sigma
from tgwa.analysis.verdict import Verdict
from tgwa.cartan.gcm import GCM, coxeter_components
from tgwa.cartan.tq import build_tq, display_name, kernel_basis_components, verify_relation
from tgwa.cli.datum_file import DatumFile, datum_to_dict, fixture_names, load_datum, write_datum
from tgwa.cli.report import digest_bytes, digest_file
from tgwa.config.caps import EngineCaps
from tgwa.core.algebra import TGWAlgebra
from tgwa.core.datum import TGWDatum, check_consistency
from tgwa.core.expressions import parse_element
from tgwa.core.families import build_sergeev
from tgwa.errors import SchemaError, UnknownEntries
from tgwa.poly.polynomial import PolyRing
from tgwa.simplicity.criteria import gwa_simplicity, orchestrate_simplicity

logger = logging.getLogger(__name__)


@dataclass
class CommandResult:
    text: str
    results: Dict[str, object] = field(default_factory=dict)
    decided: bool = True
    digest: str = ""


Handler = Callable[[argparse.Namespace, EngineCaps], CommandResult]


# ----------------------------------------------------------------------
# helpers
# ----------------------------------------------------------------------


def _load(args: argparse.Namespace) -> Tuple[DatumFile, str]:
    datum_file = load_datum(args.datum)
    return datum_file, digest_file(datum_file.path)


def _algebra(d: TGWDatum, caps: EngineCaps) -> TGWAlgebra:
    return TGWAlgebra(d, caps.deg_cap)


def _from_verdict(title: str, verdict: Verdict, digest: str) -> CommandResult:
    return CommandResult(
        f"{title}: {verdict}",
        {title: verdict.as_dict()},
        decided=not verdict.is_unknown,
        digest=digest,
    )


def _read_gcm(text: str) -> GCM:
    source = Path(text)
    raw = source.read_text(encoding="utf-8") if source.exists() else text
    try:
        rows = json.loads(raw)
    except json.JSONDecodeError as exc:
        raise SchemaError(f"GCM is not a JSON integer matrix: {exc.msg}") from exc
    if not isinstance(rows, list) or not all(isinstance(r, list) for r in rows):
        raise SchemaError("GCM must be a list of integer rows")
    return GCM.from_rows(rows).validate()


# ----------------------------------------------------------------------
# datum
# ----------------------------------------------------------------------


def cmd_validate(args, caps) -> CommandResult:
    datum_file, digest = _load(args)
    d = datum_file.datum
    return CommandResult(
        f"valid: {d.name} (rank {d.rank}, {d.nvars} variables, family {d.family})",
        {"valid": True, "name": d.name, "rank": d.rank, "variables": list(d.ring.variables)},
        digest=digest,
    )


def cmd_consistency(args, caps) -> CommandResult:
    datum_file, digest = _load(args)
    return _from_verdict("consistency", check_consistency(datum_file.datum), digest)


# ----------------------------------------------------------------------
# engine
# ----------------------------------------------------------------------


def cmd_reduce(args, caps) -> CommandResult:
    datum_file, digest = _load(args)
    alg = _algebra(datum_file.datum, caps)
    value = parse_element(alg, args.element)
    return CommandResult(alg.fmt(value), {"reduced": alg.fmt(value)}, digest=digest)


def _binary(args, caps, op: str) -> CommandResult:
    datum_file, digest = _load(args)
    alg = _algebra(datum_file.datum, caps)
    a = parse_element(alg, args.left)
    b = parse_element(alg, args.right)
    if op == "mul":
        text = alg.fmt(alg.multiply(a, b))
    elif op == "commutator":
        text = alg.fmt(alg.commutator(a, b))
    else:
        text = datum_file.datum.fmt(alg.gamma(a, b))
    return CommandResult(text, {op: text}, digest=digest)


def cmd_mul(args, caps) -> CommandResult:
    return _binary(args, caps, "mul")


def cmd_commutator(args, caps) -> CommandResult:
    return _binary(args, caps, "commutator")


def cmd_gamma(args, caps) -> CommandResult:
    return _binary(args, caps, "gamma")


def cmd_zero_test(args, caps) -> CommandResult:
    datum_file, digest = _load(args)
    alg = _algebra(datum_file.datum, caps)
    zero = alg.is_zero_in_A(parse_element(alg, args.element))
    return CommandResult(f"zero in A: {str(zero).lower()}", {"zero_in_A": zero}, digest=digest)


def cmd_verify_relation(args, caps) -> CommandResult:
    datum_file, digest = _load(args)
    alg = _algebra(datum_file.datum, caps)
    holds = verify_relation(
        datum_file.datum, parse_element(alg, args.lhs), parse_element(alg, args.rhs), caps.deg_cap
    )
    return CommandResult(f"relation holds: {str(holds).lower()}", {"holds": holds}, digest=digest)


# ----------------------------------------------------------------------
# analysis
# ----------------------------------------------------------------------


def cmd_kernel(args, caps) -> CommandResult:
    datum_file, digest = _load(args)
    K = kernel_of_sigma(datum_file.datum, caps.box)
    status = "certified" if K.certified else f"not certified (box radius {K.box_radius})"
    return CommandResult(
        f"basis {K.lattice}, {status}", {"kernel": K.as_dict()}, decided=K.certified, digest=digest
    )


def cmd_finitistic(args, caps) -> CommandResult:
    datum_file, digest = _load(args)
    profile = finitistic_profile(datum_file.datum, caps.finitistic_bound)
    rows = "\n".join(
        "  " + " ".join("?" if x is None else str(x) for x in row) for row in profile.cartan
    )
    return CommandResult(
        f"cartan matrix:\n{rows}", {"profile": profile.as_dict()}, decided=profile.all_known(), digest=digest
    )


def cmd_lie_type(args, caps) -> CommandResult:
    datum_file, digest = _load(args)
    profile = finitistic_profile(datum_file.datum, caps.finitistic_bound)
    try:
        a1n = lie_type_is_A1n(profile)
    except UnknownEntries as exc:
        return CommandResult(f"lie type unknown: {exc}", {"a1n": None}, decided=False, digest=digest)
    return CommandResult(
        f"type (A_1)^n: {str(a1n).lower()}",
        {"a1n": a1n, "cartan": [list(r) for r in profile.cartan]},
        digest=digest,
    )


def cmd_zn_simple(args, caps) -> CommandResult:
    datum_file, digest = _load(args)
    return _from_verdict("zn_simple", zn_simplicity(datum_file.datum), digest)


def cmd_center(args, caps) -> CommandResult:
    datum_file, digest = _load(args)
    d = datum_file.datum
    K = kernel_of_sigma(d, caps.box)
    return _from_verdict(
        "center_in_R", center_contained_in_R(d, K, caps.center_deg_cap, caps.coeff_cap), digest
    )


def cmd_centralizer(args, caps) -> CommandResult:
    datum_file, digest = _load(args)
    d = datum_file.datum
    K = kernel_of_sigma(d, caps.box)
    return _from_verdict("centralizer_commutative", centralizer_commutative(d, K, caps.m_cap), digest)


def cmd_maxcomm(args, caps) -> CommandResult:
    datum_file, digest = _load(args)
    d = datum_file.datum
    return _from_verdict("r_maximal_commutative", r_maximal_commutative(d, kernel_of_sigma(d, caps.box)), digest)


# ----------------------------------------------------------------------
# simplicity
# ----------------------------------------------------------------------


def cmd_simplicity(args, caps) -> CommandResult:
    datum_file, digest = _load(args)
    report = orchestrate_simplicity(datum_file.datum, caps)
    return CommandResult(report.summary(), {"simplicity": report.as_dict()}, not report.verdict.is_unknown, digest)


def cmd_gwa_simplicity(args, caps) -> CommandResult:
    datum_file, digest = _load(args)
    report = gwa_simplicity(datum_file.datum, caps)
    return CommandResult(report.summary(), {"simplicity": report.as_dict()}, not report.verdict.is_unknown, digest)


# ----------------------------------------------------------------------
# constructions
# ----------------------------------------------------------------------


def _emit_datum(d: TGWDatum, out: str | None) -> CommandResult:
    payload = datum_to_dict(d)
    text = json.dumps(payload, indent=2)
    if out:
        write_datum(d, out)
        text = f"wrote {d.name} to {out}"
    return CommandResult(text, {"datum": payload}, digest=digest_bytes(json.dumps(payload, sort_keys=True).encode()))


def cmd_cartan_build(args, caps) -> CommandResult:
    C = _read_gcm(args.gcm)
    d = build_tq(C, args.q)
    result = _emit_datum(d, args.out)
    result.results["display_names"] = {v: display_name(v, C) for v in d.ring.variables}
    return result


def cmd_cartan_kernel(args, caps) -> CommandResult:
    C = _read_gcm(args.gcm)
    lattice = kernel_basis_components(C)
    return CommandResult(
        f"basis {lattice}",
        {"kernel": lattice.as_lists(), "components": coxeter_components(C)},
        digest=digest_bytes(json.dumps(C.as_lists()).encode()),
    )


def cmd_sergeev_build(args, caps) -> CommandResult:
    ring = PolyRing(("u",))
    fs = [ring.parse(text) for text in args.f]
    return _emit_datum(build_sergeev(fs), args.out)


def cmd_examples(args, caps) -> CommandResult:
    lines: List[str] = []
    entries: Dict[str, str] = {}
    for filename in fixture_names():
        name = Path(filename).stem
        d = load_datum(filename).datum
        entries[name] = d.description
        lines.append(f"{name:<22} {d.description}")
    return CommandResult("\n".join(lines), {"examples": entries})


COMMANDS: Dict[str, Handler] = {
    "validate": cmd_validate,
    "consistency": cmd_consistency,
    "reduce": cmd_reduce,
    "mul": cmd_mul,
    "commutator": cmd_commutator,
    "zero-test": cmd_zero_test,
    "gamma": cmd_gamma,
    "kernel": cmd_kernel,
    "finitistic": cmd_finitistic,
    "lie-type": cmd_lie_type,
    "zn-simple": cmd_zn_simple,
    "center": cmd_center,
    "centralizer": cmd_centralizer,
    "maxcomm": cmd_maxcomm,
    "simplicity": cmd_simplicity,
    "gwa-simplicity": cmd_gwa_simplicity,
    "cartan-build": cmd_cartan_build,
    "cartan-kernel": cmd_cartan_kernel,
    "sergeev-build": cmd_sergeev_build,
    "verify-relation": cmd_verify_relation,
    "examples": cmd_examples,
}
