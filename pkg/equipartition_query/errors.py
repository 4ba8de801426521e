"""Exception hierarchy.

Every error is a ``ValueError`` with a readable message naming the offending
value; ``exit_code`` is what the CLI returns when the error escapes a command.
"""

from __future__ import annotations


class EquipartitionError(ValueError):
    exit_code: int = 2


class DimensionMismatch(EquipartitionError):
    pass


class NonOrthonormalInput(EquipartitionError):
    pass


class DuplicateEigenvalue(EquipartitionError):
    pass


class InvalidLabelWidth(EquipartitionError):
    pass


class InvalidObservable(EquipartitionError):
    pass


class UnnormalizedState(EquipartitionError):
    pass


class NotAPartition(EquipartitionError):
    pass


class WrongDimension(EquipartitionError):
    pass


class WrongArity(EquipartitionError):
    pass


class InvalidParameter(EquipartitionError):
    pass


class ParseError(EquipartitionError):
    pass


class UsageError(EquipartitionError):
    pass


class SizeLimitExceeded(EquipartitionError):
    exit_code = 3


def require_range(name: str, value: int, low: int, high: int) -> None:
    """Raise InvalidParameter below ``low`` and SizeLimitExceeded above ``high``."""
    if value < low:
        raise InvalidParameter(f"{name} must be >= {low}, got {value}")
    if value > high:
        raise SizeLimitExceeded(f"{name}={value} exceeds the cap {high}")
