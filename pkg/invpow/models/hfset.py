"""Canonical hereditarily finite sets."""

from functools import total_ordering
from typing import Iterable, Iterator, Optional


@total_ordering
class HfSet:
    """
    Immutable hereditarily finite set in canonical form.

    Elements are stored duplicate-free in a fixed total order: by rank, then
    cardinality, then lexicographically on the ordered elements. Two HfSets are
    equal iff their canonical element tuples are equal, so extensionality
    holds structurally and hashing agrees with extensional equality.
    """

    __slots__ = ("_elements", "_rank", "_hash", "_members")

    def __init__(self, elements: Iterable["HfSet"] = ()):
        self._init_canonical(tuple(sorted(set(elements))))

    @classmethod
    def _from_canonical(cls, elements: tuple["HfSet", ...]) -> "HfSet":
        """Build from an already sorted, duplicate-free element tuple."""
        obj = cls.__new__(cls)
        obj._init_canonical(elements)
        return obj

    def _init_canonical(self, elements: tuple["HfSet", ...]) -> None:
        self._elements = elements
        self._rank = 1 + max(e._rank for e in elements) if elements else 0
        self._hash = hash((self._rank, elements))
        self._members: Optional[frozenset[HfSet]] = None

    @property
    def elements(self) -> tuple["HfSet", ...]:
        """Elements in canonical order."""
        return self._elements

    @property
    def rank(self) -> int:
        """Set-theoretic rank: 0 for the empty set, else 1 + max element rank."""
        return self._rank

    @property
    def is_empty(self) -> bool:
        return not self._elements

    def members(self) -> frozenset["HfSet"]:
        """Element lookup table, built on first use."""
        if self._members is None:
            self._members = frozenset(self._elements)
        return self._members

    def __contains__(self, item: object) -> bool:
        return item in self.members()

    def __iter__(self) -> Iterator["HfSet"]:
        return iter(self._elements)

    def __len__(self) -> int:
        return len(self._elements)

    def __hash__(self) -> int:
        return self._hash

    def __eq__(self, other: object) -> bool:
        if self is other:
            return True
        if not isinstance(other, HfSet):
            return NotImplemented
        return (
            self._hash == other._hash
            and self._rank == other._rank
            and self._elements == other._elements
        )

    def __lt__(self, other: "HfSet") -> bool:
        if not isinstance(other, HfSet):
            return NotImplemented
        if self._rank != other._rank:
            return self._rank < other._rank
        if len(self._elements) != len(other._elements):
            return len(self._elements) < len(other._elements)
        return self._elements < other._elements

    def __str__(self) -> str:
        return "{" + ",".join(str(e) for e in self._elements) + "}"

    def __repr__(self) -> str:
        return f"HfSet({self})"


EMPTY = HfSet()
