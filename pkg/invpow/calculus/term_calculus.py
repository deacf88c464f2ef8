"""
Set terms over HF sets and the N tower: P / P^-1 application, normalization
to well-represented union forms, extended subset and equality, levels and
the subset-member relation.
"""

import logging
from functools import cmp_to_key
from typing import Optional, Union

from invpow.calculus.hf_core import (
    is_member,
    is_powered,
    is_subset_hf,
    numeral,
    powerset,
    powerset_iter,
    strip_power,
    union_hf,
)
from invpow.errors import (
    DomainError,
    RelationUndefinedError,
    UndefinedLevelError,
    UnsupportedOperandError,
)
from invpow.models.forms import Component, Finite, NatTower, NormalForm, ZermeloPart
from invpow.models.hfset import HfSet
from invpow.models.terms import (
    InvPow,
    NatBase,
    Pow,
    SetTerm,
    UnionOf,
    ZermeloLit,
    inv_pow_n,
    pow_n,
    union_of,
)

logger = logging.getLogger(__name__)

Single = Union[Finite, NatTower, Component]


# ---------------------------------------------------------------------------
# Components and ordering
# ---------------------------------------------------------------------------


def make_component(level: int, payload: ZermeloPart) -> Component:
    """
    Build ``P^-level(payload)`` after checking the payload is non-powered.

    Raises:
        DomainError: If the payload is empty
        ValueError: If the payload is powered
    """
    if payload.is_empty:
        raise DomainError(f"P^-{level} of the empty set is undefined")
    if isinstance(payload, Finite) and is_powered(payload.value):
        raise ValueError(f"Component payload {payload} is powered")
    return Component(level=level, payload=payload)


def _compare_parts(a: ZermeloPart, b: ZermeloPart) -> int:
    if a.cardinal != b.cardinal:
        return -1 if a.cardinal < b.cardinal else 1
    if isinstance(a, Finite) and isinstance(b, Finite) and a.value != b.value:
        return -1 if a.value < b.value else 1
    return 0


def _compare_components(a: Component, b: Component) -> int:
    # level ascending, then payload weight descending, then canonical order descending
    if a.level != b.level:
        return -1 if a.level < b.level else 1
    return -_compare_parts(a.payload, b.payload)


def sort_components(components: list[Component]) -> tuple[Component, ...]:
    """Well-represented order: rho descending, ties by tau descending."""
    return tuple(sorted(components, key=cmp_to_key(_compare_components)))


# ---------------------------------------------------------------------------
# Normalization
# ---------------------------------------------------------------------------


def _unwind(t: SetTerm) -> tuple[list[int], SetTerm]:
    """Split a P / P^-1 chain into its steps (innermost first) and its base."""
    steps: list[int] = []
    while isinstance(t, (Pow, InvPow)):
        steps.append(1 if isinstance(t, Pow) else -1)
        t = t.operand
    steps.reverse()
    return steps, t


def _normalize_chain(steps: list[int], base: ZermeloPart) -> Single:
    if isinstance(base, NatTower):
        core: ZermeloPart = NatTower(0)
        height = base.height
    elif -1 in steps:
        decomposition = strip_power(base.value)
        core = Finite(decomposition.core)
        height = decomposition.height
    else:
        core, height = base, 0

    # exponent == -height means the running value is the non-powered core
    exponent = 0
    for step in steps:
        if step < 0 and exponent <= -height and core.is_empty:
            raise DomainError(f"P^-1 of the empty set inside the chain over {base}")
        exponent += step

    if exponent >= 0:
        if isinstance(base, NatTower):
            return NatTower(base.height + exponent)
        return Finite(powerset_iter(base.value, exponent))

    depth = -exponent
    if height >= depth:
        if isinstance(base, NatTower):
            return NatTower(height - depth)
        value = base.value
        for _ in range(depth):
            value = union_hf(value)
        return Finite(value)

    level = depth - height
    logger.debug(f"Stripped {base} by {height}; level {level} component over {core}")
    return make_component(level, core)


def _normalize_single(t: SetTerm) -> Single:
    steps, base = _unwind(t)
    if isinstance(base, UnionOf):
        if steps:
            raise UnsupportedOperandError("P and P^-1 are not defined on union forms")
        raise UnsupportedOperandError("Expected a single term, got a union form")
    if isinstance(base, ZermeloLit):
        part: ZermeloPart = Finite(base.value)
    elif isinstance(base, NatBase):
        part = NatTower(0)
    else:
        raise TypeError(f"Not a set term: {base!r}")
    return _normalize_chain(steps, part)


def _merge_zermelo(parts: list[ZermeloPart]) -> ZermeloPart:
    towers = [p for p in parts if isinstance(p, NatTower)]
    finite = [p.value for p in parts if isinstance(p, Finite)]
    if towers:
        return NatTower(max(p.height for p in towers))
    return Finite(union_hf(finite))


def _check_unmixed(zermelo_parts: list[ZermeloPart], components: list[Component]) -> None:
    pieces = zermelo_parts + [c.payload for c in components]
    has_tower = any(isinstance(p, NatTower) for p in pieces)
    has_finite = any(isinstance(p, Finite) and not p.is_empty for p in pieces)
    if has_tower and has_finite:
        raise UnsupportedOperandError(
            "Unions mixing finite sets with the N tower are not supported"
        )


def normalize(t: SetTerm) -> NormalForm:
    """
    Reduce a term to its well-represented union form.

    Rewrites ``P^-1(P(u))`` and ``P(P^-1(u))``, strips powered payloads until
    they are non-powered, merges every Zermelo piece of a union with
    ``union_hf`` and sorts the remaining components. Components are never
    coalesced; duplicates are kept.

    Raises:
        DomainError: If some P^-1 is applied to the empty set
        UnsupportedOperandError: For P / P^-1 over unions, or finite / tower mixtures

    Example:
        >>> str(normalize(inv_pow_n(pow_n(ZermeloLit(numeral(3)), 2), 2)))
        '{{},{{}},{{},{{}}}}'
    """
    parts = t.parts if isinstance(t, UnionOf) else (t,)
    zermelo_parts: list[ZermeloPart] = []
    components: list[Component] = []
    for part in parts:
        single = _normalize_single(part)
        if isinstance(single, Component):
            components.append(single)
        else:
            zermelo_parts.append(single)

    if len(parts) > 1:
        _check_unmixed(zermelo_parts, components)
    zermelo = _merge_zermelo(zermelo_parts)
    return NormalForm(zermelo=zermelo, components=sort_components(components))


def normalize_many(parts: list[SetTerm]) -> NormalForm:
    """Normalize the union of ``parts``."""
    return normalize(union_of(*parts))


def _part_term(part: ZermeloPart) -> SetTerm:
    if isinstance(part, NatTower):
        return pow_n(NatBase(), part.height)
    return ZermeloLit(part.value)


def to_term(nf: NormalForm) -> SetTerm:
    """
    Canonical term of a normal form: Zermelo part first, then components.

    An empty Zermelo part is omitted when components exist.
    """
    pieces: list[SetTerm] = []
    if not nf.components or not nf.zermelo.is_empty:
        pieces.append(_part_term(nf.zermelo))
    for component in nf.components:
        pieces.append(inv_pow_n(_part_term(component.payload), component.level))
    return union_of(*pieces)


def as_single(nf: NormalForm) -> Optional[Single]:
    """The single Zermelo part or component of ``nf``, or None for a union form."""
    if nf.is_zermelo:
        return nf.zermelo
    if len(nf.components) == 1 and nf.zermelo.is_empty:
        return nf.components[0]
    return None


# ---------------------------------------------------------------------------
# P and P^-1
# ---------------------------------------------------------------------------


def apply_pow(t: SetTerm) -> SetTerm:
    """
    P(t), simplified.

    ``P(P^-1(u))`` gives ``u``; literals are materialized.

    Raises:
        DomainError: If ``t`` applies P^-1 to the empty set anywhere in its chain
        UnsupportedOperandError: If ``t`` is a union form
    """
    if isinstance(t, UnionOf):
        raise UnsupportedOperandError("P is not defined on union forms")
    if isinstance(t, InvPow):
        _normalize_single(t)
        return t.operand
    if isinstance(t, ZermeloLit):
        return ZermeloLit(powerset(t.value))
    return to_term(normalize(Pow(t)))


def apply_inv_pow(t: SetTerm) -> SetTerm:
    """
    P^-1(t), simplified.

    Powered literals are stripped once; non-powered ones become level-1
    components; ``P^-m(Y)`` becomes ``P^-(m+1)(Y)``.

    Raises:
        DomainError: If ``t`` denotes the empty set
        UnsupportedOperandError: If ``t`` is a union form
    """
    if isinstance(t, UnionOf):
        raise UnsupportedOperandError("P^-1 is not defined on union forms")
    if isinstance(t, Pow):
        _normalize_single(t.operand)
        return t.operand
    return to_term(normalize(InvPow(t)))


# ---------------------------------------------------------------------------
# Relations
# ---------------------------------------------------------------------------


def in_tower(a: HfSet, height: int) -> bool:
    """True iff the HF set ``a`` is an element of P^height(N)."""
    if height == 0:
        return a == numeral(len(a))
    return all(in_tower(e, height - 1) for e in a)


def _member_of_part(a: HfSet, part: ZermeloPart) -> bool:
    if isinstance(part, NatTower):
        return in_tower(a, part.height)
    return is_member(a, part.value)


def _subset_of_part(a: HfSet, part: ZermeloPart) -> bool:
    if isinstance(part, NatTower):
        return all(in_tower(e, part.height) for e in a)
    return is_subset_hf(a, part.value)


def _part_subset(x: ZermeloPart, y: ZermeloPart) -> bool:
    if isinstance(x, Finite):
        return _subset_of_part(x.value, y)
    if isinstance(y, NatTower):
        return x.height <= y.height
    return False


def subset_member(a: SetTerm, x: SetTerm, n: int) -> bool:
    """
    The relation ``a in_n x``.

    With ``x`` of level ``l`` over the Zermelo set ``Y`` (``Y = x`` at level 0),
    ``a in_l x`` iff ``a`` is an element of ``Y`` and ``a in_(l+1) x`` iff ``a`` is
    a subset of ``Y``. For Zermelo ``x`` this gives classical membership at
    ``n = 0`` and the subset relation at ``n = 1``.

    Raises:
        RelationUndefinedError: If ``a`` is not a finite Zermelo set, ``x`` is a
            union form, or ``n`` does not match the level of ``x``
    """
    if n < 0:
        raise ValueError(f"Relation index must be non-negative, got {n}")
    a_single = as_single(normalize(a))
    if not isinstance(a_single, Finite):
        raise RelationUndefinedError("Subset-members must be finite Zermelo sets")
    x_single = as_single(normalize(x))
    if x_single is None:
        raise RelationUndefinedError("Subset-membership in union forms is undefined")

    if isinstance(x_single, Component):
        level, base = x_single.level, x_single.payload
    else:
        level, base = 0, x_single

    offset = n - level
    if offset == 0:
        return _member_of_part(a_single.value, base)
    if offset == 1:
        return _subset_of_part(a_single.value, base)
    raise RelationUndefinedError(
        f"in_{n} is undefined for a set of level {level}"
    )


def subset_members(t: SetTerm) -> tuple[HfSet, ...]:
    """
    The ``in_l``-members of a finite single term of level ``l >= 1``, or its
    ``in_1``-members (all subsets) when it is a Zermelo set.

    For ``T = P^-1(X)`` this is always the element list of ``X``.
    """
    single = as_single(normalize(t))
    if single is None:
        raise RelationUndefinedError("Union forms have no single member relation")
    base = single.payload if isinstance(single, Component) else single
    if not isinstance(base, Finite):
        raise UnsupportedOperandError("Members of the N tower cannot be enumerated")
    if isinstance(single, Component):
        return base.value.elements
    return powerset(base.value).elements


def is_zermelo(t: SetTerm) -> bool:
    """True iff ``t`` normalizes to a form without components."""
    return normalize(t).is_zermelo


def level_of(t: SetTerm) -> int:
    """
    0 for Zermelo sets, ``m`` for ``P^-m(Y)`` with ``Y`` non-powered.

    Raises:
        UndefinedLevelError: If ``t`` normalizes to a union form
    """
    single = as_single(normalize(t))
    if single is None:
        raise UndefinedLevelError(f"Union form {normalize(t)} has no single level")
    return single.level if isinstance(single, Component) else 0


def same_level(x: SetTerm, y: SetTerm) -> bool:
    """Both terms are single terms of the same level."""
    try:
        return level_of(x) == level_of(y)
    except UndefinedLevelError:
        return False


def ext_subset(x: SetTerm, y: SetTerm) -> bool:
    """
    Extended subset relation.

    Zermelo sets compare classically; ``P^-m(X')`` and ``P^-m(Y')`` compare by
    their payloads.

    Raises:
        RelationUndefinedError: For different levels or union forms
    """
    x_single = as_single(normalize(x))
    y_single = as_single(normalize(y))
    if x_single is None or y_single is None:
        raise RelationUndefinedError("Extended subset is undefined on union forms")
    x_component = isinstance(x_single, Component)
    y_component = isinstance(y_single, Component)
    if not x_component and not y_component:
        return _part_subset(x_single, y_single)  # type: ignore[arg-type]
    if x_component and y_component and x_single.level == y_single.level:  # type: ignore[union-attr]
        return _part_subset(x_single.payload, y_single.payload)  # type: ignore[union-attr]
    raise RelationUndefinedError("Extended subset is undefined across levels")


def ext_equal(x: SetTerm, y: SetTerm) -> bool:
    """
    Extended equality.

    Single terms of the same level are equal iff each is a subset of the
    other; everything else compares by normal form.
    """
    if same_level(x, y):
        return ext_subset(x, y) and ext_subset(y, x)
    return normalize(x) == normalize(y)


def term_is_powered(t: SetTerm) -> Optional[bool]:
    """
    Whether ``t`` is a powered Zermelo set; None when unknown (N itself).

    Non-Zermelo terms and union forms are never powered Zermelo sets.
    """
    nf = normalize(t)
    if not nf.is_zermelo:
        return False
    part = nf.zermelo
    if isinstance(part, NatTower):
        return True if part.height >= 1 else None
    return is_powered(part.value)
