"""Exception hierarchy.

Everything raised deliberately by the library derives from
:class:`HopfError`; the CLI maps :class:`InvalidInput` to exit code 2.
"""

from __future__ import annotations


class HopfError(Exception):
    pass


class InvalidInput(HopfError):
    """Malformed user input (files, names, shapes)."""


class ParseError(InvalidInput):
    pass


class FieldMismatch(InvalidInput):
    pass


class DivisionByZero(HopfError, ZeroDivisionError):
    pass


class NotCyclotomic(InvalidInput):
    pass


class ShapeMismatch(InvalidInput):
    pass


class LegMismatch(ShapeMismatch):
    pass


class FactorMismatch(ShapeMismatch):
    pass


class UnknownName(InvalidInput):
    pass


class BadField(InvalidInput):
    pass


class Singular(HopfError):
    pass


class AxiomFailure(HopfError):
    """A construction was rejected because an identity failed.

    ``report`` carries the failing checks with their witnesses.
    """

    def __init__(self, message: str, report=None):
        super().__init__(message)
        self.report = report


class ActionInvalid(AxiomFailure):
    pass


class FormulaMismatch(AxiomFailure):
    pass


class HomomorphismFailure(AxiomFailure):
    pass


class NotInvertible(AxiomFailure):
    pass


class SingularU(NotInvertible):
    pass


class IllDefinedProduct(AxiomFailure):
    pass


class NotInvariant(AxiomFailure):
    pass


class NotHomomorphism(AxiomFailure):
    pass
