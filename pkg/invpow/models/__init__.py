"""Core data models for InvPow."""

from invpow.models.cardinals import LevelRank, SymCardinal
from invpow.models.enums import CardinalTier, CheckStatus, OrderKind, OutputFormat, Verdict
from invpow.models.forms import Component, Finite, NatTower, NormalForm, ZermeloPart
from invpow.models.hfset import EMPTY, HfSet
from invpow.models.report import AuditConfig, AuditReport
from invpow.models.results import CliConfig, CompareResult, EvalResult, WitnessResult
from invpow.models.terms import InvPow, NatBase, Pow, SetTerm, UnionOf, ZermeloLit, union_of

__all__ = [
    "HfSet",
    "EMPTY",
    "SetTerm",
    "ZermeloLit",
    "NatBase",
    "Pow",
    "InvPow",
    "UnionOf",
    "union_of",
    "Finite",
    "NatTower",
    "ZermeloPart",
    "Component",
    "NormalForm",
    "SymCardinal",
    "LevelRank",
    "CardinalTier",
    "Verdict",
    "OrderKind",
    "OutputFormat",
    "CheckStatus",
    "AuditConfig",
    "AuditReport",
    "CliConfig",
    "EvalResult",
    "CompareResult",
    "WitnessResult",
]
