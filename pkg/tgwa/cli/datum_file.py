"""
Leitura e escrita do dado TGW em JSON.

Esquema:
    { "name", "rank", "variables", "sigma": [{"map", "inverse"}], "t", "mu",
      "family", "description"?, "provenance"? }

Variáveis ausentes em "map"/"inverse" são a identidade.
"""

from __future__ import annotations

import json
import logging
from dataclasses import dataclass
from importlib import resources
from pathlib import Path
from typing import Dict, List, Mapping, Union

from tgwa.arith.rational import format_rational, parse_rational
from tgwa.core.datum import TGWDatum, validate_datum
from tgwa.errors import SchemaError, ValidationError
from tgwa.poly.endo import FAMILY_TAGS, Endo
from tgwa.poly.polynomial import Poly, PolyRing

logger = logging.getLogger(__name__)

FIXTURE_PACKAGE = "tgwa.fixtures"

REQUIRED_KEYS = ("name", "rank", "variables", "sigma", "t", "mu", "family")


@dataclass(frozen=True)
class DatumFile:
    datum: TGWDatum
    path: str
    provenance: str = ""

    @property
    def name(self) -> str:
        return self.datum.name

    @property
    def description(self) -> str:
        return self.datum.description


def fixture_names() -> List[str]:
    folder = resources.files(FIXTURE_PACKAGE)
    return sorted(p.name for p in folder.iterdir() if p.name.endswith(".json"))


def resolve_path(path: Union[str, Path]) -> Path:
    """An existing path as given, otherwise a bundled fixture of that name."""
    candidate = Path(path)
    if candidate.exists():
        return candidate
    name = candidate.name if candidate.name.endswith(".json") else f"{candidate.name}.json"
    bundled = resources.files(FIXTURE_PACKAGE) / name
    if bundled.is_file():
        return Path(str(bundled))
    raise FileNotFoundError(f"no such datum file or bundled fixture: {path}")


def _require(cond: bool, message: str) -> None:
    if not cond:
        raise SchemaError(message)


def _polys(ring: PolyRing, mapping: object, where: str) -> List[Poly]:
    _require(isinstance(mapping, dict), f"{where} must be an object")
    out = ring.gens()
    for var, text in mapping.items():
        _require(var in ring.variables, f"{where}: unknown variable {var!r}")
        _require(isinstance(text, str), f"{where}[{var}] must be a string")
        out[ring.index(var)] = ring.parse(text)
    return out


def datum_from_dict(raw: Mapping[str, object]) -> TGWDatum:
    for key in REQUIRED_KEYS:
        _require(key in raw, f"missing key {key!r}")
    n = raw["rank"]
    _require(isinstance(n, int) and n >= 1, "rank must be a positive integer")
    variables = raw["variables"]
    _require(
        isinstance(variables, list) and all(isinstance(v, str) for v in variables),
        "variables must be a list of strings",
    )
    _require(len(set(variables)) == len(variables), "variables must be distinct")
    family = raw["family"]
    _require(family in FAMILY_TAGS, f"family must be one of {list(FAMILY_TAGS)}")

    ring = PolyRing(tuple(variables))
    sigma_raw = raw["sigma"]
    _require(isinstance(sigma_raw, list) and len(sigma_raw) == n, f"sigma must list {n} maps")
    sigma = []
    for i, entry in enumerate(sigma_raw, start=1):
        _require(isinstance(entry, dict), f"sigma[{i}] must be an object")
        images = _polys(ring, entry.get("map", {}), f"sigma[{i}].map")
        inverse = _polys(ring, entry.get("inverse", {}), f"sigma[{i}].inverse")
        sigma.append(Endo(tuple(images), tuple(inverse)))

    t_raw = raw["t"]
    _require(isinstance(t_raw, list) and len(t_raw) == n, f"t must list {n} polynomials")
    _require(all(isinstance(x, str) for x in t_raw), "t entries must be strings")
    t = tuple(ring.parse(x) for x in t_raw)

    mu_raw = raw["mu"]
    _require(
        isinstance(mu_raw, list) and len(mu_raw) == n and all(isinstance(r, list) and len(r) == n for r in mu_raw),
        f"mu must be a {n}x{n} matrix",
    )
    try:
        mu = tuple(tuple(parse_rational(str(x)) for x in row) for row in mu_raw)
    except ValueError as exc:
        raise SchemaError(f"mu: {exc}") from exc

    return TGWDatum(
        name=str(raw["name"]),
        ring=ring,
        sigma=tuple(sigma),
        t=t,
        mu=mu,
        family=family,
        description=str(raw.get("description", "")),
    )


def load_datum(path: Union[str, Path]) -> DatumFile:
    resolved = resolve_path(path)
    try:
        raw = json.loads(resolved.read_text(encoding="utf-8"))
    except json.JSONDecodeError as exc:
        raise SchemaError(f"invalid JSON at line {exc.lineno}, column {exc.colno}: {exc.msg}") from exc
    _require(isinstance(raw, dict), "top level must be an object")
    datum = datum_from_dict(raw)
    report = validate_datum(datum)
    if not report.ok:
        raise ValidationError(report.problems)
    logger.debug("loaded %s from %s", datum.name, resolved)
    return DatumFile(datum, str(resolved), str(raw.get("provenance", "")))


def datum_to_dict(d: TGWDatum) -> Dict[str, object]:
    names = d.ring.variables

    def mapping(polys) -> Dict[str, str]:
        return {
            names[v]: p.format(names)
            for v, p in enumerate(polys)
            if p != Poly.variable(d.nvars, v)
        }

    return {
        "name": d.name,
        "description": d.description,
        "rank": d.rank,
        "variables": list(names),
        "sigma": [{"map": mapping(e.images), "inverse": mapping(e.inverse)} for e in d.sigma],
        "t": [d.fmt(ti) for ti in d.t],
        "mu": [[format_rational(x) for x in row] for row in d.mu],
        "family": d.family,
    }


def write_datum(d: TGWDatum, path: Union[str, Path]) -> Path:
    target = Path(path)
    target.write_text(json.dumps(datum_to_dict(d), indent=2) + "\n", encoding="utf-8")
    return target
