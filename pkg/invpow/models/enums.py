"""Enumerations for InvPow models."""

from enum import Enum, IntEnum


class Verdict(str, Enum):
    """Outcome of comparing two extended cardinalities."""

    LESS = "lt"
    EQUAL = "eq"
    GREATER = "gt"
    INCOMPARABLE = "incomparable"

    def flipped(self) -> "Verdict":
        """Return the verdict seen from the other operand."""
        if self is Verdict.LESS:
            return Verdict.GREATER
        if self is Verdict.GREATER:
            return Verdict.LESS
        return self


class OrderKind(str, Enum):
    """Extended cardinality orders."""

    CH = "ch"
    NEG_CH = "negch"
    NEG_CHS = "negchs"


class OutputFormat(str, Enum):
    """CLI output formats."""

    TEXT = "text"
    JSON = "json"


class CardinalTier(IntEnum):
    """Tier of a symbolic cardinal; every finite cardinal precedes every Beth."""

    FIN = 0
    BETH = 1


class CheckStatus(str, Enum):
    """Audit check status."""

    PASS = "pass"
    FAIL = "fail"
    ERROR = "error"  # The check could not run, e.g. a resource limit
