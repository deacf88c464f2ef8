"""Hereditarily finite sets: membership, subsets, powersets and power stripping."""

import logging
import random
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Optional

from invpow.config import get_settings
from invpow.errors import ResourceLimitError
from invpow.models.hfset import EMPTY, HfSet

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class PowerDecomposition:
    """``x = P^height(core)`` with ``core`` non-powered and ``height`` maximal."""

    core: HfSet
    height: int

    def recompose(self) -> HfSet:
        return powerset_iter(self.core, self.height)


def make_set(elems: Iterable[HfSet]) -> HfSet:
    """
    Build the canonical set of ``elems``.

    Args:
        elems: Any iterable of HfSets; order and duplicates are irrelevant

    Returns:
        Canonical HfSet

    Example:
        >>> make_set([EMPTY, EMPTY]) == make_set([EMPTY])
        True
    """
    return HfSet(elems)


def numeral(n: int) -> HfSet:
    """
    Von Neumann numeral: ``0 = {}`` and ``n + 1 = n u {n}``.

    Example:
        >>> str(numeral(2))
        '{{},{{}}}'
    """
    if n < 0:
        raise ValueError(f"Numerals are non-negative, got {n}")
    return _numerals(n)[n]


@lru_cache(maxsize=None)
def _numerals(n: int) -> tuple[HfSet, ...]:
    values = [EMPTY]
    for _ in range(n):
        # n's elements are 0..n-1, already in canonical (rank) order
        values.append(HfSet._from_canonical(tuple(values)))
    return tuple(values)


def is_member(a: HfSet, x: HfSet) -> bool:
    """True iff ``a`` is an element of ``x``."""
    return a in x


def is_subset_hf(a: HfSet, b: HfSet) -> bool:
    """Classical subset: every element of ``a`` is an element of ``b``."""
    if len(a) > len(b) or a.rank > b.rank:
        return False
    members = b.members()
    return all(e in members for e in a)


def _check_width(x: HfSet) -> None:
    width = get_settings().max_powerset_width
    if len(x) > width:
        raise ResourceLimitError(
            f"Powerset of a {len(x)}-element set exceeds max_powerset_width={width}"
        )


def powerset(x: HfSet) -> HfSet:
    """
    Set of all subsets of ``x``.

    Raises:
        ResourceLimitError: If ``|x|`` exceeds the configured powerset width
    """
    _check_width(x)
    elements = x.elements
    subsets = []
    for mask in range(1 << len(elements)):
        # A subsequence of a canonical tuple is canonical
        picked = tuple(e for i, e in enumerate(elements) if mask >> i & 1)
        subsets.append(HfSet._from_canonical(picked))
    return HfSet(subsets)


def powerset_iter(x: HfSet, times: int) -> HfSet:
    """Apply :func:`powerset` ``times`` times."""
    for _ in range(times):
        x = powerset(x)
    return x


def union_hf(xs: Iterable[HfSet]) -> HfSet:
    """Element-wise union of the given sets."""
    return HfSet(e for x in xs for e in x)


def is_powered(x: HfSet) -> bool:
    """
    True iff ``x = P(x')`` for some HF set ``x'``.

    Uses the closed form ``x == P(u x)``; the cardinality test rules out most
    candidates before any powerset is built.
    """
    if x.is_empty:
        return False
    top = union_hf(x)
    if len(x) != 1 << len(top):
        return False
    return x == powerset(top)


def strip_power(x: HfSet) -> PowerDecomposition:
    """
    Maximal decomposition ``x = P^height(core)``.

    Example:
        >>> strip_power(numeral(2))
        PowerDecomposition(core=HfSet({}), height=2)
    """
    core, height = x, 0
    while is_powered(core):
        core = union_hf(core)
        height += 1
    return PowerDecomposition(core=core, height=height)


def cardinality_hf(x: HfSet) -> int:
    return len(x)


def rank(x: HfSet) -> int:
    return x.rank


def is_transitive(x: HfSet) -> bool:
    """Every element of ``x`` is also a subset of ``x``."""
    return all(is_subset_hf(e, x) for e in x)


def downward_closed(x: HfSet) -> bool:
    """
    True iff every subset of every element of ``x`` is again an element.

    For finite sets it suffices to check closure under removing one element.
    """
    members = x.members()
    for e in x:
        for a in e:
            if HfSet(b for b in e if b != a) not in members:
                return False
    return True


def _check_rank(value: int, limit: int, label: str) -> None:
    if value < 0:
        raise ValueError(f"Rank must be non-negative, got {value}")
    if value > limit:
        raise ResourceLimitError(f"Rank {value} exceeds {label}={limit}")


@lru_cache(maxsize=None)
def _universe(value: int) -> tuple[HfSet, ...]:
    level: tuple[HfSet, ...] = (EMPTY,)
    for _ in range(value):
        level = powerset(HfSet._from_canonical(level)).elements
    return level


def enumerate_universe(value: int) -> tuple[HfSet, ...]:
    """
    All HF sets of rank at most ``value``, in canonical order.

    Sizes are 1, 2, 4, 16 and 65536 for ranks 0 to 4.

    Raises:
        ResourceLimitError: If ``value`` exceeds ``max_rank``
    """
    _check_rank(value, get_settings().max_rank, "max_rank")
    logger.debug(f"Enumerating universe of rank {value}")
    return _universe(value)


def sample_universe(value: int, count: int, rng: Optional[random.Random] = None) -> list[HfSet]:
    """
    Draw ``count`` seeded random sets of rank at most ``value``.

    Each draw is a uniform random subset of the rank ``value - 1`` universe, so
    rank 4 is sampled without building all of its 65536 members.
    """
    _check_rank(value, get_settings().max_rank, "max_rank")
    if value == 0:
        return [EMPTY] * count
    rng = rng or random.Random(get_settings().default_seed)
    base = _universe(value - 1)
    samples = []
    for _ in range(count):
        bits = rng.getrandbits(len(base))
        picked = tuple(e for i, e in enumerate(base) if bits >> i & 1)
        samples.append(HfSet._from_canonical(picked))
    return samples


def exhaustive_universe(value: int) -> tuple[HfSet, ...]:
    """Like :func:`enumerate_universe`, bounded by ``exhaustive_rank`` for pairwise sweeps."""
    _check_rank(value, get_settings().exhaustive_rank, "exhaustive_rank")
    return _universe(value)
