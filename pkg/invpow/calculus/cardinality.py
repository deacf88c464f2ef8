"""
Extended cardinalities: degree, CH-cardinality, the partial ¬CH order, the
lexicographic ¬CHS order and the density witness between two ¬CHS cardinals.
"""

import logging
from dataclasses import dataclass
from itertools import zip_longest
from typing import Optional, Union

from invpow.calculus.hf_core import powerset, strip_power
from invpow.calculus.term_calculus import as_single, normalize, sort_components
from invpow.errors import OrderingError, OutsideEZFError, WitnessUnavailableError
from invpow.models.cardinals import LevelRank, SymCardinal
from invpow.models.enums import Verdict
from invpow.models.forms import Component, Finite, NatTower, NormalForm, ZermeloPart
from invpow.models.terms import SetTerm

logger = logging.getLogger(__name__)

Slot = Optional[Union[Component, Finite, NatTower]]


def degree(z: ZermeloPart) -> int:
    """
    Degree k of a Zermelo set: ``|P^(k-1)(N)| < |X| <= |P^k(N)|``, 0 when ``|X| <= |N|``.
    """
    if isinstance(z, NatTower):
        return z.height
    return 0


# ---------------------------------------------------------------------------
# CH-cardinality
# ---------------------------------------------------------------------------


def ch_card(t: SetTerm) -> SymCardinal:
    """
    CH-cardinality of a term of EZF.

    Zermelo sets keep their classical cardinality. ``P^-1(X)`` with ``X`` of
    degree ``k >= 1`` gets ``Beth(k - 1)``; degree 0 gets ``Beth(0) = |N|``.

    Raises:
        OutsideEZFError: For levels >= 2 or union forms with components

    Example:
        >>> str(ch_card(InvPow(ZermeloLit(numeral(3)))))
        'beth:0'
    """
    nf = normalize(t)
    single = as_single(nf)
    if isinstance(single, (Finite, NatTower)):
        return single.cardinal
    if isinstance(single, Component) and single.level == 1:
        k = degree(single.payload)
        return SymCardinal.beth(max(k - 1, 0))
    raise OutsideEZFError(f"CH-cardinality is defined on EZF only, got {nf}")


def ch_leq(a: SetTerm, b: SetTerm) -> bool:
    return ch_card(a) <= ch_card(b)


def ch_cmp(a: SetTerm, b: SetTerm) -> Verdict:
    """CH comparison as a verdict; the CH order is total."""
    left, right = ch_card(a), ch_card(b)
    if left == right:
        return Verdict.EQUAL
    return Verdict.LESS if left < right else Verdict.GREATER


def is_ch_finite(t: SetTerm) -> bool:
    """A term of EZF is finite iff its CH-cardinality is finite."""
    return ch_card(t).is_finite


# ---------------------------------------------------------------------------
# Slots, rho and tau
# ---------------------------------------------------------------------------


def rho(c: Slot) -> LevelRank:
    """Zero for the Zermelo part, Neg(m) for a level-m component, NegInfinity for padding."""
    if c is None:
        return LevelRank.neg_infinity()
    if isinstance(c, Component):
        return LevelRank.neg(c.level)
    return LevelRank.zero()


def tau(c: Slot) -> SymCardinal:
    """Cardinality of the Zermelo part or of the component payload; Fin(0) for padding."""
    if c is None:
        return SymCardinal.fin(0)
    if isinstance(c, Component):
        return c.payload.cardinal
    return c.cardinal


def slots(nf: NormalForm) -> list[Slot]:
    """The Zermelo slot followed by the components."""
    return [nf.zermelo, *nf.components]


def signature(nf: NormalForm) -> tuple[tuple[LevelRank, SymCardinal], ...]:
    """(rho, tau) per slot; both extended orders only see this sequence."""
    return tuple((rho(s), tau(s)) for s in slots(nf))


# ---------------------------------------------------------------------------
# ¬CH
# ---------------------------------------------------------------------------


def _neg_ch_leq(x: NormalForm, y: NormalForm) -> bool:
    x_top, y_top = tau(x.zermelo), tau(y.zermelo)
    if x_top < y_top:
        return True
    if x_top != y_top or x.slot_count > y.slot_count:
        return False
    return all(
        rho(a) <= rho(b) and tau(a) <= tau(b)
        for a, b in zip(x.components, y.components)
    )


def neg_ch_cmp(x: NormalForm, y: NormalForm) -> Verdict:
    """
    ¬CH comparison of two well-represented forms.

    ``x <= y`` iff ``|X1| < |Y1|``, or ``|X1| = |Y1|``, x has at most as many
    slots as y and every component of x is bounded index-wise in rho and tau
    by the matching component of y. Surplus components of y are unconstrained.
    The order is partial; Incomparable is reported explicitly.
    """
    if signature(x) == signature(y):
        return Verdict.EQUAL
    if _neg_ch_leq(x, y):
        return Verdict.LESS
    if _neg_ch_leq(y, x):
        return Verdict.GREATER
    return Verdict.INCOMPARABLE


# ---------------------------------------------------------------------------
# ¬CHS
# ---------------------------------------------------------------------------


def neg_chs_cmp(x: NormalForm, y: NormalForm) -> Verdict:
    """
    Lexicographic ¬CHS comparison.

    The shorter form is padded with empty slots (rho = NegInfinity, tau =
    Fin(0)). At the first slot where the (rho, tau) pairs differ, rho decides
    and tau breaks ties. The result is a total preorder.
    """
    padding = (LevelRank.neg_infinity(), SymCardinal.fin(0))
    for left, right in zip_longest(signature(x), signature(y), fillvalue=padding):
        if left == right:
            continue
        return Verdict.LESS if left < right else Verdict.GREATER
    return Verdict.EQUAL


def _core(part: ZermeloPart) -> ZermeloPart:
    if isinstance(part, NatTower):
        return NatTower(0)
    return Finite(strip_power(part.value).core)


def _has_finite(nf: NormalForm) -> bool:
    return any(isinstance(p, Finite) and not p.is_empty for p in [nf.zermelo, *(c.payload for c in nf.components)])


def _has_tower(nf: NormalForm) -> bool:
    return any(isinstance(p, NatTower) for p in [nf.zermelo, *(c.payload for c in nf.components)])


def between_witness(x: NormalForm, y: NormalForm) -> NormalForm:
    """
    A form U with ``x < U < y`` in the ¬CHS order.

    ``U = X u P^(r-1)(K)``: r is the least finite rho over both forms, so the new
    component sits below every existing one, and K is the non-powered core of
    the slot with the smallest nonzero tau. Candidates whose core is empty are
    skipped, as are cores that would mix finite sets with the N tower.

    Raises:
        OrderingError: If ``x`` is not strictly below ``y``
        WitnessUnavailableError: If no candidate core is usable
    """
    verdict = neg_chs_cmp(x, y)
    if verdict is not Verdict.LESS:
        raise OrderingError(f"Expected x < y in the negchs order, got {verdict.value}")

    r = min(rho(s).value for s in slots(x) + slots(y))
    level = 1 - r

    candidates: list[tuple[SymCardinal, int, ZermeloPart]] = []
    for position, slot in enumerate(slots(x) + slots(y)):
        weight = tau(slot)
        if weight == SymCardinal.fin(0):
            continue
        part = slot.payload if isinstance(slot, Component) else slot
        candidates.append((weight, position, part))  # type: ignore[arg-type]
    candidates.sort(key=lambda c: (c[0], c[1]))

    for weight, _, part in candidates:
        core = _core(part)
        if core.is_empty:
            logger.warning(f"Skipping witness candidate {part}: its core is empty")
            continue
        if isinstance(core, NatTower) and _has_finite(x):
            logger.warning(f"Skipping witness candidate {part}: N core beside finite sets")
            continue
        if isinstance(core, Finite) and _has_tower(x):
            logger.warning(f"Skipping witness candidate {part}: finite core beside the N tower")
            continue
        logger.debug(f"Witness core {core} (tau {weight}) at level {level}")
        components = sort_components([*x.components, Component(level=level, payload=core)])
        return NormalForm(zermelo=x.zermelo, components=components)

    raise WitnessUnavailableError(f"No usable witness core between {x} and {y}")


def nested_density_chain(x: NormalForm, y: NormalForm, depth: int) -> list[NormalForm]:
    """
    ``depth`` forms ``x < U1 < U2 < ... < y``, each a witness between the
    previous one and ``y``.
    """
    chain: list[NormalForm] = []
    low = x
    for _ in range(depth):
        low = between_witness(low, y)
        chain.append(low)
    return chain


@dataclass(frozen=True)
class NegChExamples:
    """Forms strictly inside the two gaps opened by ``Z u P^-n(Z')``."""

    below: tuple[NormalForm, ...]  # between Z and Z u P^-n(Z')
    above: tuple[NormalForm, ...]  # between Z u P^-n(Z') and P(Z)


def neg_ch_examples(z: ZermeloPart, z_prime: ZermeloPart, n: int) -> NegChExamples:
    """
    Example ¬CH cardinals around ``Z u P^-n(Z')``.

    The ``Z u P^-(n-1)(Z')`` example needs ``n >= 2`` and is omitted otherwise.
    """
    if n < 1:
        raise ValueError(f"n must be at least 1, got {n}")

    def form(*levels: int) -> NormalForm:
        components = [Component(level=m, payload=z_prime) for m in levels]
        return NormalForm(zermelo=z, components=sort_components(components))

    below = (form(n + 1), form(n + 2))
    above = [form(n, n + 1), form(n, n + 2), form(n, n + 1, n + 1), form(n, n + 1, n + 2)]
    if n >= 2:
        above.insert(0, form(n - 1))
    return NegChExamples(below=below, above=tuple(above))


def powered_form(z: ZermeloPart) -> NormalForm:
    """The Zermelo form P(Z)."""
    if isinstance(z, NatTower):
        return NormalForm(zermelo=NatTower(z.height + 1))
    return NormalForm(zermelo=Finite(powerset(z.value)))
