"""Checks over the hereditarily finite core."""

from invpow.audit.base import CheckRun, register_check
from invpow.audit.oracles import brute_force_powered, powered_by_closure, subsets_via_members
from invpow.calculus.hf_core import (
    cardinality_hf,
    exhaustive_universe,
    is_member,
    is_powered,
    is_subset_hf,
    make_set,
    powerset,
    powerset_iter,
    strip_power,
    union_hf,
)
from invpow.models.hfset import HfSet


def universe_with_powersets(rank: int) -> list[HfSet]:
    """V_rank together with the powerset of each of its members, deduplicated."""
    universe = exhaustive_universe(rank)
    extended = dict.fromkeys(universe)
    for x in universe:
        extended.setdefault(powerset(x))
    return list(extended)


@register_check("extensionality", "pairs (A, B) in V{rank} x V{rank}")
def check_extensionality(run: CheckRun) -> None:
    universe = exhaustive_universe(run.config.rank)
    for a in universe:
        rebuilt = make_set(reversed(a.elements + a.elements))
        run.expect(rebuilt == a, a)
    for a in universe:
        for b in universe:
            same_members = set(a.elements) == set(b.elements)
            run.expect((make_set(a.elements) == make_set(b.elements)) == same_members, a, b)


@register_check("powerset-monotone", "pairs (X, Y) in V{rank} x V{rank}")
def check_powerset_monotone(run: CheckRun) -> None:
    universe = exhaustive_universe(run.config.rank)
    powersets = {x: powerset(x) for x in universe}
    for x in universe:
        for y in universe:
            run.expect(is_subset_hf(x, y) == is_subset_hf(powersets[x], powersets[y]), x, y)


@register_check("equiv", "pairs (A, B) in V{rank} x V{rank}")
def check_equiv(run: CheckRun) -> None:
    universe = exhaustive_universe(run.config.rank)
    for a in universe:
        for b in universe:
            by_members = all(is_member(x, b) for x in a)
            run.expect(subsets_via_members(a, b) == by_members, a, b)


@register_check("powered-oracle", "X in V{rank} and P(X) for X in V{rank}")
def check_powered_oracle(run: CheckRun) -> None:
    for x in universe_with_powersets(run.config.rank):
        search_rank = max(x.rank - 1, 0)
        closed_form = is_powered(x)
        run.expect(closed_form == brute_force_powered(x, search_rank) == powered_by_closure(x), x)


@register_check("strip-roundtrip", "X in V{rank} and P(X) for X in V{rank}")
def check_strip_roundtrip(run: CheckRun) -> None:
    for x in universe_with_powersets(run.config.rank):
        decomposition = strip_power(x)
        ok = (
            powerset_iter(decomposition.core, decomposition.height) == x
            and not is_powered(decomposition.core)
        )
        run.expect(ok, x)


@register_check("powerset-cardinality", "X in V{rank}")
def check_powerset_cardinality(run: CheckRun) -> None:
    for x in exhaustive_universe(run.config.rank):
        run.expect(cardinality_hf(powerset(x)) == 2 ** cardinality_hf(x), x)


@register_check("union-powerset", "X in V{rank}")
def check_union_powerset(run: CheckRun) -> None:
    for x in exhaustive_universe(run.config.rank):
        run.expect(union_hf(powerset(x).elements) == x, x)
