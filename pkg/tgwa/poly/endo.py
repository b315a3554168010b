"""
Endomorfismos de substituição de Q[u_1, ..., u_N] com inverso declarado.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import List, Literal, Optional, Sequence, Tuple

from tgwa.errors import DimensionMismatch
from tgwa.poly.polynomial import Poly

FamilyTag = Literal["translation", "triangular-q", "generic"]
FAMILY_TAGS: Tuple[str, ...] = ("translation", "triangular-q", "generic")


@dataclass(frozen=True)
class Endo:
    """Substitution u_j -> images[j], with a declared inverse substitution."""

    images: Tuple[Poly, ...]
    inverse: Tuple[Poly, ...]

    def __post_init__(self) -> None:
        if len(self.images) != len(self.inverse):
            raise DimensionMismatch("images and inverse must have the same length")

    @property
    def nvars(self) -> int:
        return len(self.images)

    @classmethod
    def identity(cls, nvars: int) -> "Endo":
        gens = tuple(Poly.variable(nvars, i) for i in range(nvars))
        return cls(gens, gens)

    def apply(self, p: Poly) -> Poly:
        if p.nvars != self.nvars:
            raise DimensionMismatch(f"polynomial in {p.nvars} variables, endo on {self.nvars}")
        return p.substitute(self.images, self.nvars)

    def inverse_endo(self) -> "Endo":
        return Endo(self.inverse, self.images)

    def compose(self, other: "Endo") -> "Endo":
        """self o other, i.e. p -> self(other(p))."""
        if other.nvars != self.nvars:
            raise DimensionMismatch("endomorphisms act on different rings")
        images = tuple(self.apply(q) for q in other.images)
        inverse = tuple(other.inverse_endo().apply(q) for q in self.inverse)
        return Endo(images, inverse)

    def power(self, k: int) -> "Endo":
        base = self if k >= 0 else self.inverse_endo()
        k = abs(k)
        result = Endo.identity(self.nvars)
        while k:
            if k & 1:
                result = result.compose(base)
            base = base.compose(base)
            k >>= 1
        return result

    def is_identity(self) -> bool:
        return all(img == Poly.variable(self.nvars, j) for j, img in enumerate(self.images))

    def is_affine(self) -> bool:
        return all(img.degree <= 1 for img in self.images)

    def affine_parts(self) -> Tuple[List[List[Fraction]], List[Fraction]]:
        """(A, b) with images[j] = sum_k A[j][k] u_k + b[j]; affine endos only."""
        if not self.is_affine():
            raise ValueError("endomorphism is not affine")
        a = [img.linear_coefficients() for img in self.images]
        b = [img.constant_value() for img in self.images]
        return a, b

    def translation_vector(self) -> Optional[List[Fraction]]:
        """c with images[j] = u_j + c[j], or None if not a translation."""
        out = []
        for j, img in enumerate(self.images):
            diff = img - Poly.variable(self.nvars, j)
            if not diff.is_constant():
                return None
            out.append(diff.constant_value())
        return out


def apply_endo(e: Endo, p: Poly) -> Poly:
    return e.apply(p)


def is_automorphism_pair(e: Endo) -> bool:
    gens = [Poly.variable(e.nvars, j) for j in range(e.nvars)]
    inv = e.inverse_endo()
    return all(e.apply(e.inverse[j]) == gens[j] for j in range(e.nvars)) and all(
        inv.apply(e.images[j]) == gens[j] for j in range(e.nvars)
    )


def endos_commute(e1: Endo, e2: Endo) -> bool:
    if e1.nvars != e2.nvars:
        raise DimensionMismatch("endomorphisms act on different rings")
    return all(e1.apply(q) == e2.apply(p) for p, q in zip(e1.images, e2.images))


def family_problems(
    family: str, sigma: Sequence[Endo], variables: Sequence[str]
) -> List[str]:
    """Every way the declared family tag fails to describe `sigma`."""
    problems: List[str] = []
    if family not in FAMILY_TAGS:
        return [f"unknown family {family!r}"]
    if family == "translation":
        for i, e in enumerate(sigma, start=1):
            if e.translation_vector() is None:
                problems.append(f"sigma_{i} is not a translation")
    elif family == "triangular-q":
        for i, e in enumerate(sigma, start=1):
            for side, polys in (("image", e.images), ("inverse", e.inverse)):
                for j, img in enumerate(polys):
                    if img.degree > 1 or img.constant_value() != 0:
                        problems.append(f"sigma_{i} {side} of {variables[j]} is not linear")
                    elif any(k > j for k in img.variables_used()):
                        problems.append(
                            f"sigma_{i} {side} of {variables[j]} involves a later variable"
                        )
    return problems
