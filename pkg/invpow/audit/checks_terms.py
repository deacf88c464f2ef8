"""Checks over terms: inverses, extended subsets and normalization."""

import numpy as np

from invpow.audit.base import CheckRun, register_check
from invpow.audit.generators import generate_forms, non_powered, nonempty
from invpow.calculus.hf_core import (
    downward_closed,
    exhaustive_universe,
    is_member,
    is_powered,
    is_subset_hf,
    powerset,
    union_hf,
)
from invpow.calculus.term_calculus import (
    apply_inv_pow,
    apply_pow,
    ext_equal,
    ext_subset,
    is_zermelo,
    level_of,
    normalize,
    same_level,
    subset_member,
    subset_members,
    to_term,
)
from invpow.models.hfset import HfSet
from invpow.models.terms import InvPow, NatBase, Pow, SetTerm, UnionOf, ZermeloLit, inv_pow_n, union_of


def level_pool(rank: int, level: int) -> list[SetTerm]:
    """Single terms of one level: V_rank literals at level 0, else P^-level of non-powered payloads."""
    universe = exhaustive_universe(rank)
    if level == 0:
        return [ZermeloLit(x) for x in universe]
    return [inv_pow_n(ZermeloLit(x), level) for x in non_powered(universe)]


@register_check("inverse", "nonempty X in V{rank}")
def check_inverse(run: CheckRun) -> None:
    for x in nonempty(exhaustive_universe(run.config.rank)):
        literal = ZermeloLit(x)
        via_rules = normalize(apply_pow(apply_inv_pow(literal)))
        via_normalize = normalize(Pow(InvPow(literal)))
        run.expect(via_rules == via_normalize == normalize(literal), x)


@register_check("inverse2", "nonempty X in V{rank}")
def check_inverse2(run: CheckRun) -> None:
    for x in nonempty(exhaustive_universe(run.config.rank)):
        literal = ZermeloLit(x)
        via_rules = normalize(apply_inv_pow(apply_pow(literal)))
        via_normalize = normalize(InvPow(Pow(literal)))
        run.expect(via_rules == via_normalize == normalize(literal), x)


@register_check("uniqueness", "nonempty X in V{rank}; candidates V{rank} and P^-1 of its non-powered sets")
def check_uniqueness(run: CheckRun) -> None:
    universe = exhaustive_universe(run.config.rank)
    candidates = level_pool(run.config.rank, 0) + level_pool(run.config.rank, 1)
    images = [(normalize(c), normalize(apply_pow(c))) for c in candidates]
    for x in nonempty(universe):
        target = normalize(ZermeloLit(x))
        expected = normalize(apply_inv_pow(ZermeloLit(x)))
        preimages = {c for c, image in images if image == target}
        ok = normalize(apply_pow(to_term(expected))) == target and preimages <= {expected}
        run.expect(ok, x)


@register_check("suppesinverse", "nonempty pairs (X, Y) in V{rank} x V{rank}")
def check_suppesinverse(run: CheckRun) -> None:
    universe = nonempty(exhaustive_universe(run.config.rank))
    for x in universe:
        for y in universe:
            inv_x, inv_y = InvPow(ZermeloLit(x)), InvPow(ZermeloLit(y))
            if same_level(inv_x, inv_y):
                inverse_side = ext_subset(inv_x, inv_y)
            else:
                # Different levels: compare the in_1-member collections
                inverse_side = set(subset_members(inv_x)) <= set(subset_members(inv_y))
            run.expect(ext_subset(ZermeloLit(x), ZermeloLit(y)) == inverse_side, x, y)


@register_check("suppes", "pairs (X, Y) in V{rank} x V{rank}")
def check_suppes(run: CheckRun) -> None:
    universe = exhaustive_universe(run.config.rank)
    for x in universe:
        for y in universe:
            subset = ext_subset(ZermeloLit(x), ZermeloLit(y))
            ok = (
                subset == is_subset_hf(powerset(x), powerset(y))
                and subset == ext_subset(apply_pow(ZermeloLit(x)), apply_pow(ZermeloLit(y)))
            )
            run.expect(ok, x, y)


@register_check("inversesuppecor", "nonempty pairs (X, Y) in V{rank} x V{rank}")
def check_inversesuppecor(run: CheckRun) -> None:
    universe = nonempty(exhaustive_universe(run.config.rank))
    for x in universe:
        for y in universe:
            equal = ext_equal(InvPow(ZermeloLit(x)), InvPow(ZermeloLit(y)))
            run.expect(equal == (x == y), x, y)


@register_check("suppescor", "pairs (X, Y) in V{rank} x V{rank}")
def check_suppescor(run: CheckRun) -> None:
    universe = exhaustive_universe(run.config.rank)
    for x in universe:
        for y in universe:
            equal = ext_equal(apply_pow(ZermeloLit(x)), apply_pow(ZermeloLit(y)))
            run.expect(equal == (x == y), x, y)


@register_check("subsetequals0", "single terms of levels 0-2 over V{rank}")
def check_subsetequals0(run: CheckRun) -> None:
    for level in range(3):
        for term in level_pool(run.config.rank, level):
            run.expect(ext_subset(term, term), term)


@register_check("subsetequals", "same-level pairs of levels 0-2 over V{rank}")
def check_subsetequals(run: CheckRun) -> None:
    for level in range(3):
        pool = level_pool(run.config.rank, level)
        for a in pool:
            for b in pool:
                both = ext_subset(a, b) and ext_subset(b, a)
                run.expect(both == ext_equal(a, b), a, b)


def _subset_matrix(pool: list[SetTerm]) -> np.ndarray:
    return np.array([[ext_subset(a, b) for b in pool] for a in pool], dtype=bool)


@register_check("transitivity", "Zermelo triples in V{rank} and same-level triples of levels 1-2")
def check_transitivity(run: CheckRun) -> None:
    for level in range(3):
        pool = level_pool(run.config.rank, level)
        size = len(pool)
        if not size:
            continue
        relation = _subset_matrix(pool)
        # paths[i, k] counts the B with A <= B and B <= C
        paths = relation.astype(np.int64) @ relation.astype(np.int64)
        violations = (paths > 0) & ~relation
        bad = int(paths[violations].sum())
        run.tested += size**3 - bad
        for i, k in zip(*np.nonzero(violations)):
            for j in np.nonzero(relation[i] & relation[:, k])[0]:
                run.fail(pool[int(i)], pool[int(j)], pool[int(k)])


@register_check("zermelo-prop", "P^-1(X) for nonempty X in V{rank}")
def check_zermelo_prop(run: CheckRun) -> None:
    for x in nonempty(exhaustive_universe(run.config.rank)):
        term = InvPow(ZermeloLit(x))
        members = HfSet(subset_members(term))
        closed = downward_closed(members) and union_hf(members.elements) in members
        ok = members == x and is_zermelo(term) == closed == is_powered(x)
        run.expect(ok, x)


@register_check("pow-zermelo", "X in V{rank}, P^-1 of its non-powered sets, N and P^-1(N)")
def check_pow_zermelo(run: CheckRun) -> None:
    rank = run.config.rank
    pool = level_pool(rank, 0) + level_pool(rank, 1) + [NatBase(), InvPow(NatBase())]
    for term in pool:
        in_ezf = level_of(term) <= 1
        run.expect(in_ezf and is_zermelo(apply_pow(term)) and is_zermelo(Pow(term)), term)


@register_check("subset-assignment", "pairs (A, X) in V{rank} x V{rank}")
def check_subset_assignment(run: CheckRun) -> None:
    universe = exhaustive_universe(run.config.rank)
    for a in universe:
        for x in universe:
            ok = (
                subset_member(ZermeloLit(a), ZermeloLit(x), 1) == is_subset_hf(a, x)
                and subset_member(ZermeloLit(a), ZermeloLit(x), 0) == is_member(a, x)
            )
            run.expect(ok, a, x)


@register_check("subset-member-inverse", "A in V{rank}, nonempty X in V{rank}")
def check_subset_member_inverse(run: CheckRun) -> None:
    universe = exhaustive_universe(run.config.rank)
    for a in universe:
        for x in nonempty(universe):
            relation = subset_member(ZermeloLit(a), InvPow(ZermeloLit(x)), 1)
            run.expect(relation == is_member(a, x), a, x)


@register_check(
    "normalize-idempotent",
    "generated forms over V{rank} (2000 by default), with shuffled union parts",
    exhaustive=False,
)
def check_normalize_idempotent(run: CheckRun) -> None:
    pool = exhaustive_universe(min(run.config.rank, 3))
    payloads = non_powered(exhaustive_universe(3))
    forms = generate_forms(pool, 3, 3, seed=run.rng.randrange(2**32), payloads=payloads)
    for _ in range(run.samples(2000)):
        nf = next(forms)
        term = to_term(nf)
        parts = list(term.parts) if isinstance(term, UnionOf) else [term]
        run.rng.shuffle(parts)
        shuffled = union_of(*parts)
        once = normalize(term)
        run.expect(once == nf and normalize(shuffled) == nf and normalize(to_term(once)) == once, nf)
