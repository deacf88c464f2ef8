"""Set term nodes over HF sets and the symbolic N tower."""

from dataclasses import dataclass
from typing import Union

from invpow.models.hfset import HfSet


@dataclass(frozen=True)
class ZermeloLit:
    """A hereditarily finite Zermelo set literal."""

    value: HfSet


@dataclass(frozen=True)
class NatBase:
    """The symbol N (von Neumann omega)."""


@dataclass(frozen=True)
class Pow:
    """P(operand)."""

    operand: "SetTerm"


@dataclass(frozen=True)
class InvPow:
    """P^-1(operand)."""

    operand: "SetTerm"


@dataclass(frozen=True)
class UnionOf:
    """
    Formal finite union, flattened, with at least two parts.

    Parts keep their given order; union semantics (commutativity, multiset
    components) are applied by normalization, not by the node.
    """

    parts: tuple["SetTerm", ...]

    def __post_init__(self) -> None:
        if len(self.parts) < 2:
            raise ValueError("UnionOf requires at least two parts")
        if any(isinstance(p, UnionOf) for p in self.parts):
            raise ValueError("UnionOf parts must be flattened")


SetTerm = Union[ZermeloLit, NatBase, Pow, InvPow, UnionOf]


def union_of(*parts: SetTerm) -> SetTerm:
    """Build a flattened union; a single part is returned unchanged."""
    flat: list[SetTerm] = []
    for part in parts:
        if isinstance(part, UnionOf):
            flat.extend(part.parts)
        else:
            flat.append(part)
    if not flat:
        raise ValueError("union_of requires at least one part")
    if len(flat) == 1:
        return flat[0]
    return UnionOf(tuple(flat))


def pow_n(term: SetTerm, times: int) -> SetTerm:
    """Wrap ``term`` in ``times`` nested Pow nodes."""
    for _ in range(times):
        term = Pow(term)
    return term


def inv_pow_n(term: SetTerm, times: int) -> SetTerm:
    """Wrap ``term`` in ``times`` nested InvPow nodes."""
    for _ in range(times):
        term = InvPow(term)
    return term
