"""Zermelo parts, components and well-represented union normal forms."""

from dataclasses import dataclass, field
from typing import Union

from invpow.models.cardinals import SymCardinal
from invpow.models.hfset import EMPTY, HfSet


@dataclass(frozen=True)
class Finite:
    """A finite Zermelo part given by an HF set."""

    value: HfSet

    @property
    def is_empty(self) -> bool:
        return self.value.is_empty

    @property
    def cardinal(self) -> SymCardinal:
        return SymCardinal.fin(len(self.value))

    def __str__(self) -> str:
        return str(self.value)


@dataclass(frozen=True)
class NatTower:
    """The Zermelo set P^height(N)."""

    height: int

    def __post_init__(self) -> None:
        if self.height < 0:
            raise ValueError(f"Tower height must be non-negative, got {self.height}")

    @property
    def is_empty(self) -> bool:
        return False

    @property
    def cardinal(self) -> SymCardinal:
        """|P^height(N)| = Beth(height)."""
        return SymCardinal.beth(self.height)

    def __str__(self) -> str:
        return "P(" * self.height + "N" + ")" * self.height


ZermeloPart = Union[Finite, NatTower]


@dataclass(frozen=True)
class Component:
    """
    Non-Zermelo union component P^-level(payload).

    The payload is nonempty and non-powered; for the N tower only N itself
    qualifies. Non-poweredness of finite payloads is checked by the calculus
    factory that builds components.
    """

    level: int
    payload: ZermeloPart

    def __post_init__(self) -> None:
        if self.level < 1:
            raise ValueError(f"Component level must be positive, got {self.level}")
        if self.payload.is_empty:
            raise ValueError("Component payload must be nonempty")
        if isinstance(self.payload, NatTower) and self.payload.height != 0:
            raise ValueError("Only N itself is a non-powered tower payload")

    def __str__(self) -> str:
        return f"P^-{self.level}({self.payload})"


@dataclass(frozen=True)
class NormalForm:
    """
    Well-represented union form: one Zermelo part plus level components.

    Components are sorted by level ascending, ties by payload cardinality
    descending; duplicates are kept.
    """

    zermelo: ZermeloPart = field(default_factory=lambda: Finite(EMPTY))
    components: tuple[Component, ...] = ()

    @property
    def is_zermelo(self) -> bool:
        return not self.components

    @property
    def slot_count(self) -> int:
        """Number of union slots, counting the Zermelo slot."""
        return 1 + len(self.components)

    def __str__(self) -> str:
        pieces = [str(c) for c in self.components]
        if not pieces or not self.zermelo.is_empty:
            pieces.insert(0, str(self.zermelo))
        return " u ".join(pieces)
