"""Exception hierarchy for InvPow.

Every error raised by the calculus derives from ``InvPowError``. Errors that
describe a bad input value also derive from ``ValueError``.
"""

from typing import Optional


class InvPowError(Exception):
    """Base class for all InvPow errors."""


class DomainError(InvPowError, ValueError):
    """An operator was applied outside its domain (e.g. P^-1 of the empty set)."""


class UnsupportedOperandError(InvPowError, ValueError):
    """The operand shape is not supported (union forms under P, mixed towers)."""


class RelationUndefinedError(InvPowError, ValueError):
    """A membership or subset relation is not defined for the given levels."""


class UndefinedLevelError(InvPowError, ValueError):
    """A union form has no single level."""


class OutsideEZFError(InvPowError, ValueError):
    """CH-cardinality requested for a term outside EZF (level >= 2 or unions)."""


class OrderingError(InvPowError, ValueError):
    """The inputs are not strictly ordered as required."""


class WitnessUnavailableError(InvPowError):
    """No eligible witness core exists for the density construction."""


class ResourceLimitError(InvPowError):
    """A configured enumeration or materialization limit was exceeded."""


class UnknownCheckError(InvPowError, KeyError):
    """The requested audit check is not registered."""

    def __str__(self) -> str:
        return str(self.args[0]) if self.args else "unknown check"


class ExprError(InvPowError, ValueError):
    """Base class for errors reported by the expression parser."""

    def __init__(self, message: str, line: Optional[int] = None, column: Optional[int] = None):
        self.message = message
        self.line = line
        self.column = column
        if line is not None and column is not None:
            message = f"{message} (line {line}, column {column})"
        super().__init__(message)


class ExprSyntaxError(ExprError):
    """The input text does not match the grammar."""


class StructuralError(ExprError):
    """The input parses but violates a structural rule (mixed set literals)."""
