"""Brute-force oracles, written independently of the closed forms they check."""

from invpow.calculus.hf_core import enumerate_universe, powerset
from invpow.config import get_settings
from invpow.models.enums import Verdict
from invpow.models.hfset import HfSet


def brute_force_powered(x: HfSet, rank: int) -> bool:
    """
    Search the rank-``rank`` universe for some ``x'`` with ``P(x') = x``.

    Args:
        x: Set to test
        rank: Search rank; must be at least ``rank(x) - 1``

    Raises:
        ValueError: If the search rank cannot contain a preimage
        ResourceLimitError: If the rank exceeds ``max_rank``
    """
    if rank < x.rank - 1:
        raise ValueError(f"Search rank {rank} is below rank(x) - 1 = {x.rank - 1}")
    if x.is_empty:
        return False
    width = get_settings().max_powerset_width
    for candidate in enumerate_universe(rank):
        if len(candidate) > width or 1 << len(candidate) != len(x):
            continue
        if powerset(candidate) == x:
            return True
    return False


def subsets_via_members(a: HfSet, b: HfSet) -> bool:
    """``S <= A => S <= B`` for every S, evaluated over the subsets of A."""
    subsets_of_b = set(powerset(b).elements)
    return all(s in subsets_of_b for s in powerset(a).elements)


def powered_by_closure(x: HfSet) -> bool:
    """
    Powered test by structure: nonempty, closed under subsets of members and
    containing the union of its members.
    """
    if x.is_empty:
        return False
    members = set(x.elements)
    top = {e for member in x for e in member}
    if HfSet(top) not in members:
        return False
    for member in x:
        for sub in powerset(member):
            if sub not in members:
                return False
    return True


def member_count_order(a: HfSet, b: HfSet) -> Verdict:
    """Classical cardinal comparison by counting elements one by one."""
    left = sum(1 for _ in a)
    right = sum(1 for _ in b)
    if left == right:
        return Verdict.EQUAL
    return Verdict.LESS if left < right else Verdict.GREATER
