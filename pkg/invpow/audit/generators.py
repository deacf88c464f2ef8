"""Seeded generators and exhaustive enumerators for terms and normal forms."""

import random
from dataclasses import dataclass
from itertools import combinations_with_replacement
from typing import Iterable, Iterator, Optional, Sequence

from invpow.calculus.cardinality import signature
from invpow.calculus.hf_core import exhaustive_universe, is_powered, sample_universe, strip_power
from invpow.calculus.term_calculus import sort_components
from invpow.models.forms import Component, Finite, NormalForm
from invpow.models.hfset import EMPTY, HfSet
from invpow.models.terms import InvPow, NatBase, Pow, SetTerm, ZermeloLit, inv_pow_n, pow_n, union_of


def nonempty(sets: Iterable[HfSet]) -> list[HfSet]:
    return [s for s in sets if not s.is_empty]


def non_powered(sets: Iterable[HfSet]) -> list[HfSet]:
    """Nonempty non-powered sets: the admissible component payloads."""
    return [s for s in sets if not s.is_empty and not is_powered(s)]


def empty_core_free(sets: Iterable[HfSet]) -> list[HfSet]:
    """Nonempty sets whose non-powered core is nonempty."""
    return [s for s in sets if not s.is_empty and not strip_power(s).core.is_empty]


@dataclass(frozen=True)
class FormFamily:
    """Bounded family of normal forms with finite parts."""

    zermelo: tuple[HfSet, ...]
    payloads: tuple[HfSet, ...]
    max_components: int = 2
    max_level: int = 3

    @classmethod
    def from_rank(cls, rank: int, max_components: int = 2, max_level: int = 3) -> "FormFamily":
        """Zermelo parts from V_rank, payloads its nonempty non-powered members."""
        universe = exhaustive_universe(rank)
        return cls(tuple(universe), tuple(non_powered(universe)), max_components, max_level)

    def component_kinds(self) -> list[Component]:
        return [
            Component(level=level, payload=Finite(payload))
            for level in range(1, self.max_level + 1)
            for payload in self.payloads
        ]


def generate_forms(
    pool: Sequence[HfSet],
    max_components: int,
    max_level: int,
    seed: int,
    payloads: Optional[Sequence[HfSet]] = None,
    empty_rate: float = 0.1,
    duplicate_rate: float = 0.2,
) -> Iterator[NormalForm]:
    """
    Endless reproducible stream of normal forms.

    Zermelo parts are drawn from ``pool`` (or are empty with probability
    ``empty_rate``); payloads default to the nonempty non-powered members of
    the pool. Some forms repeat a component on purpose.

    Example:
        >>> forms = generate_forms([numeral(3), make_set([numeral(1)])], 2, 3, seed=42)
        >>> first = next(forms)
    """
    if not pool:
        raise ValueError("generate_forms needs a nonempty pool")
    payload_pool = list(payloads) if payloads is not None else non_powered(pool)
    if max_components and not payload_pool:
        raise ValueError("No admissible component payloads in the pool")
    rng = random.Random(seed)
    while True:
        zermelo = EMPTY if rng.random() < empty_rate else rng.choice(pool)
        count = rng.randint(0, max_components)
        components = [
            Component(level=rng.randint(1, max_level), payload=Finite(rng.choice(payload_pool)))
            for _ in range(count)
        ]
        if count >= 2 and rng.random() < duplicate_rate:
            components[1] = components[0]
        yield NormalForm(zermelo=Finite(zermelo), components=sort_components(components))


def enumerate_forms(family: FormFamily) -> Iterator[NormalForm]:
    """Every form of the family, each component multiset once."""
    kinds = family.component_kinds()
    for zermelo in family.zermelo:
        for count in range(family.max_components + 1):
            for combo in combinations_with_replacement(kinds, count):
                yield NormalForm(zermelo=Finite(zermelo), components=sort_components(list(combo)))


def signature_classes(forms: Iterable[NormalForm]) -> list[NormalForm]:
    """One representative per (rho, tau) signature, in first-seen order."""
    seen: dict[tuple, NormalForm] = {}
    for nf in forms:
        seen.setdefault(signature(nf), nf)
    return list(seen.values())


def generate_terms(seed: int, rank: int = 3, max_depth: int = 4) -> Iterator[SetTerm]:
    """
    Endless stream of random, possibly non-normalized, terms for printer tests.

    Terms need not denote anything; they only have to be well-formed trees.
    """
    rng = random.Random(seed)
    universe = exhaustive_universe(min(rank, 3))

    def build(depth: int) -> SetTerm:
        roll = rng.random()
        if depth == 0 or roll < 0.3:
            return NatBase() if rng.random() < 0.1 else ZermeloLit(rng.choice(universe))
        if roll < 0.5:
            return Pow(build(depth - 1))
        if roll < 0.75:
            return inv_pow_n(build(depth - 1), rng.randint(1, 3))
        return union_of(*(build(depth - 1) for _ in range(rng.randint(2, 3))))

    while True:
        yield build(max_depth)


def generate_ezf_terms(rng: random.Random, rank: int, count: int) -> list[SetTerm]:
    """
    Random terms of EZF (Zermelo sets and level-1 components), mixing literal
    sets, N towers and inverse powersets of both.
    """
    literals = sample_universe(rank, count, rng)
    payloads = non_powered(exhaustive_universe(3))
    terms: list[SetTerm] = []
    for literal in literals:
        kind = rng.randrange(6)
        if kind == 0:
            terms.append(ZermeloLit(literal))
        elif kind == 1:
            terms.append(InvPow(ZermeloLit(rng.choice(payloads))))
        elif kind == 2 and len(literal) <= 6:
            terms.append(InvPow(Pow(ZermeloLit(literal))))
        elif kind == 3:
            terms.append(pow_n(NatBase(), rng.randint(0, 3)))
        elif kind == 4:
            terms.append(inv_pow_n(pow_n(NatBase(), rng.randint(0, 3)), 1))
        else:
            terms.append(ZermeloLit(literal))
    return terms
