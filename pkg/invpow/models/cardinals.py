"""Symbolic cardinals and level ranks."""

from dataclasses import dataclass

from invpow.models.enums import CardinalTier


@dataclass(frozen=True, order=True)
class SymCardinal:
    """
    Symbolic cardinal: ``Fin(n)`` or ``Beth(k)`` with ``Beth(k) = |P^k(N)|``.

    Field order gives the total order: every finite cardinal precedes every
    Beth, finite cardinals compare by n and Beths by k.
    """

    tier: CardinalTier
    value: int

    def __post_init__(self) -> None:
        if self.value < 0:
            raise ValueError(f"Cardinal index must be non-negative, got {self.value}")

    @classmethod
    def fin(cls, n: int) -> "SymCardinal":
        return cls(CardinalTier.FIN, n)

    @classmethod
    def beth(cls, k: int) -> "SymCardinal":
        return cls(CardinalTier.BETH, k)

    @property
    def is_finite(self) -> bool:
        return self.tier is CardinalTier.FIN

    def __str__(self) -> str:
        prefix = "fin" if self.is_finite else "beth"
        return f"{prefix}:{self.value}"


@dataclass(frozen=True, order=True)
class LevelRank:
    """
    Value of the component rank: ``Zero``, ``Neg(m)`` or ``NegInfinity``.

    Stored as ``(finite, value)`` with ``value = -m`` so that the dataclass order
    is NegInfinity < Neg(m) < Neg(m - 1) < ... < Zero.
    """

    finite: bool
    value: int

    @classmethod
    def zero(cls) -> "LevelRank":
        return cls(True, 0)

    @classmethod
    def neg(cls, m: int) -> "LevelRank":
        if m <= 0:
            raise ValueError(f"Neg(m) requires a positive level, got {m}")
        return cls(True, -m)

    @classmethod
    def neg_infinity(cls) -> "LevelRank":
        return cls(False, 0)

    @property
    def level(self) -> int:
        """Positive level m for Neg(m), 0 for Zero."""
        if not self.finite:
            raise ValueError("NegInfinity has no level")
        return -self.value

    def __str__(self) -> str:
        return str(self.value) if self.finite else "-inf"
