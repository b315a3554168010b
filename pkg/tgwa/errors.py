"""
Exceções do motor TGWA.

Resultados matemáticos (sim / não / desconhecido) nunca são exceções: eles
voltam como Verdict. As classes abaixo sinalizam entrada inválida ou um
invariante interno violado.
"""

from __future__ import annotations


class TGWAError(Exception):
    """Base class for every error raised by the engine."""


# ----------------------------------------------------------------------
# Arithmetic and polynomials
# ----------------------------------------------------------------------


class ZeroValue(TGWAError):
    pass


class ZeroPolynomial(TGWAError):
    pass


class PolySyntaxError(TGWAError):
    def __init__(self, position: int, message: str) -> None:
        super().__init__(f"position {position}: {message}")
        self.position = position
        self.message = message


class UnknownVariable(TGWAError):
    def __init__(self, name: str, position: int | None = None) -> None:
        where = "" if position is None else f" at position {position}"
        super().__init__(f"unknown variable {name!r}{where}")
        self.name = name
        self.position = position


class DimensionMismatch(TGWAError):
    pass


# ----------------------------------------------------------------------
# Engine
# ----------------------------------------------------------------------


class DegreeTooLarge(TGWAError):
    def __init__(self, degree: tuple, cap: int) -> None:
        super().__init__(
            f"degree {degree} has total size {sum(abs(g) for g in degree)} "
            f"above the enumeration cap {cap}"
        )
        self.degree = degree
        self.cap = cap


class InternalReductionStuck(TGWAError):
    pass


class InternalInvariantError(TGWAError):
    pass


class UnknownEntries(TGWAError):
    pass


class FamilyMismatch(TGWAError):
    pass


# ----------------------------------------------------------------------
# Cartan matrices
# ----------------------------------------------------------------------


class InvalidGCM(TGWAError):
    pass


class ZeroQ(TGWAError):
    pass


# ----------------------------------------------------------------------
# Datum files
# ----------------------------------------------------------------------


class SchemaError(TGWAError):
    pass


class ValidationError(TGWAError):
    def __init__(self, problems: list[str]) -> None:
        super().__init__("; ".join(problems))
        self.problems = list(problems)


INTERNAL_ERRORS = (InternalReductionStuck, InternalInvariantError)
