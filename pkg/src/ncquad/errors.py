"""Exceptions shared across the package."""


class AlgebraError(Exception):
    """Base class for domain errors raised by ncquad."""


class MixedFieldsError(AlgebraError):
    """Operands belong to different coefficient fields."""


class NoCubeRootError(AlgebraError):
    """The field has no primitive cube root of unity."""


class CharThreeError(AlgebraError):
    """Characteristic-3 fields are unsupported."""


class DimensionMismatchError(AlgebraError):
    """Matrix or generator-count shapes do not agree."""


class IncompleteBasisError(AlgebraError):
    """A result was requested beyond the certified degree of a basis."""


class PreconditionViolatedError(AlgebraError):
    """Input lies outside the domain an operation is defined on."""


class DegenerateDenominatorError(AlgebraError):
    """A fractional-linear map hit a vanishing denominator."""


class ParseError(AlgebraError):
    """Malformed presentation file or scalar/polynomial literal."""

    def __init__(self, message, line=None):
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
        self.line = line


class UnknownGeneratorError(ParseError):
    """A polynomial references a generator that was not declared."""


class HomogeneityError(ParseError):
    """A relation or potential is not homogeneous."""
