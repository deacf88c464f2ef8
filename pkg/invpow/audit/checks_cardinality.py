"""Checks over CH, ¬CH and ¬CHS cardinalities."""

import numpy as np

from invpow.audit.base import CheckRun, register_check
from invpow.audit.generators import (
    FormFamily,
    empty_core_free,
    enumerate_forms,
    generate_ezf_terms,
    generate_forms,
    non_powered,
    nonempty,
    signature_classes,
)
from invpow.audit.oracles import member_count_order
from invpow.calculus.cardinality import (
    between_witness,
    ch_card,
    ch_cmp,
    ch_leq,
    nested_density_chain,
    neg_ch_cmp,
    neg_ch_examples,
    neg_chs_cmp,
    powered_form,
    signature,
)
from invpow.calculus.hf_core import cardinality_hf, exhaustive_universe
from invpow.calculus.term_calculus import normalize, to_term
from invpow.errors import WitnessUnavailableError
from invpow.models.cardinals import SymCardinal
from invpow.models.enums import Verdict
from invpow.models.forms import Finite, NormalForm
from invpow.models.hfset import HfSet
from invpow.models.terms import InvPow, NatBase, Pow, UnionOf, ZermeloLit, inv_pow_n, union_of

THEOREM_LEVELS = range(1, 6)


def _family_rank(run: CheckRun) -> int:
    """Rank of the Zermelo pool for sampled form families; V2 is the smallest with usable cores."""
    return max(2, min(run.config.rank, 3))


def bounded_classes(rank: int) -> list[NormalForm]:
    """Signature representatives of Zermelo part in V_rank, <= 2 components, levels <= 3."""
    return signature_classes(enumerate_forms(FormFamily.from_rank(rank)))


@register_check("ch-minimality", "P^-1(A) for nonempty non-powered A in V{rank}, and P^-1(P(N))")
def check_ch_minimality(run: CheckRun) -> None:
    for a in non_powered(exhaustive_universe(run.config.rank)):
        run.expect(ch_card(InvPow(ZermeloLit(a))) == SymCardinal.beth(0), a)
    term = InvPow(Pow(NatBase()))
    run.expect(ch_card(term) == SymCardinal.beth(0), term)


@register_check("ch-inverse-squeeze", "P^-1(P(X)) for X in V{rank}")
def check_ch_inverse_squeeze(run: CheckRun) -> None:
    for x in exhaustive_universe(run.config.rank):
        run.expect(ch_card(InvPow(Pow(ZermeloLit(x)))) == SymCardinal.fin(cardinality_hf(x)), x)


@register_check("ch-bernstein", "seeded pairs of EZF terms over V{rank} (1000 by default)", exhaustive=False)
def check_ch_bernstein(run: CheckRun) -> None:
    count = run.samples(1000)
    left = generate_ezf_terms(run.rng, run.config.rank, count)
    right = generate_ezf_terms(run.rng, run.config.rank, count)
    for a, b in zip(left, right):
        both = ch_leq(a, b) and ch_leq(b, a)
        ok = (not both or ch_card(a) == ch_card(b)) and ch_cmp(a, b) == ch_cmp(b, a).flipped()
        run.expect(ok, a, b)


@register_check("ch-transitivity", "seeded triples of EZF terms over V{rank} (1000 by default)", exhaustive=False)
def check_ch_transitivity(run: CheckRun) -> None:
    count = run.samples(1000)
    triples = zip(*(generate_ezf_terms(run.rng, run.config.rank, count) for _ in range(3)))
    for a, b, c in triples:
        ok = not (ch_leq(a, b) and ch_leq(b, c)) or ch_leq(a, c)
        run.expect(ok, a, b, c)


@register_check("ch-subsumption", "X in V{rank}")
def check_ch_subsumption(run: CheckRun) -> None:
    for x in exhaustive_universe(run.config.rank):
        run.expect(ch_card(ZermeloLit(x)) == SymCardinal.fin(cardinality_hf(x)), x)


@register_check("neg-ch-bernstein", "signature classes of the bounded form family over V{rank}, all pairs")
def check_neg_ch_bernstein(run: CheckRun) -> None:
    classes = bounded_classes(run.config.rank)
    for x in classes:
        for y in classes:
            forward, backward = neg_ch_cmp(x, y), neg_ch_cmp(y, x)
            equal_shape = signature(x) == signature(y)
            ok = forward == backward.flipped() and (forward is Verdict.EQUAL) == equal_shape
            run.expect(ok, x, y)


@register_check(
    "neg-ch-commutativity",
    "generated forms over V{rank} against generated forms, shuffled union parts (500 by default)",
    exhaustive=False,
)
def check_neg_ch_commutativity(run: CheckRun) -> None:
    pool = exhaustive_universe(min(run.config.rank, 3))
    payloads = non_powered(exhaustive_universe(3))
    forms = generate_forms(pool, 3, 3, seed=run.rng.randrange(2**32), payloads=payloads)
    for _ in range(run.samples(500)):
        x, other = next(forms), next(forms)
        term = to_term(x)
        parts = list(term.parts) if isinstance(term, UnionOf) else [term]
        run.rng.shuffle(parts)
        shuffled = normalize(union_of(*parts))
        ok = neg_ch_cmp(shuffled, other) == neg_ch_cmp(x, other) and neg_chs_cmp(shuffled, other) == neg_chs_cmp(x, other)
        run.expect(ok, x, other)


def _theorem_forms(z: HfSet, z_prime: HfSet, n: int) -> tuple[NormalForm, NormalForm, NormalForm]:
    lower = normalize(ZermeloLit(z))
    middle = normalize(union_of(ZermeloLit(z), inv_pow_n(ZermeloLit(z_prime), n)))
    upper = powered_form(Finite(z))
    return lower, middle, upper


@register_check("neg-ch-theorem", "nonempty Z, nonempty non-powered Z' in V{rank}, n in 1..5")
def check_neg_ch_theorem(run: CheckRun) -> None:
    universe = exhaustive_universe(run.config.rank)
    for z in nonempty(universe):
        for z_prime in non_powered(universe):
            for n in THEOREM_LEVELS:
                lower, middle, upper = _theorem_forms(z, z_prime, n)
                ok = neg_ch_cmp(lower, middle) is Verdict.LESS and neg_ch_cmp(middle, upper) is Verdict.LESS
                run.expect(ok, z, z_prime, n)


@register_check("neg-ch-examples", "nonempty Z, nonempty non-powered Z' in V{rank}, n in 1..5")
def check_neg_ch_examples(run: CheckRun) -> None:
    universe = exhaustive_universe(run.config.rank)
    for z in nonempty(universe):
        for z_prime in non_powered(universe):
            for n in THEOREM_LEVELS:
                lower, middle, upper = _theorem_forms(z, z_prime, n)
                examples = neg_ch_examples(Finite(z), Finite(z_prime), n)
                ok = all(
                    neg_ch_cmp(lower, e) is Verdict.LESS and neg_ch_cmp(e, middle) is Verdict.LESS
                    for e in examples.below
                ) and all(
                    neg_ch_cmp(middle, e) is Verdict.LESS and neg_ch_cmp(e, upper) is Verdict.LESS
                    for e in examples.above
                )
                run.expect(ok, z, z_prime, n)


@register_check("neg-ch-zermelo-consistency", "pairs (X, Y) in V{rank} x V{rank}")
def check_neg_ch_zermelo_consistency(run: CheckRun) -> None:
    universe = exhaustive_universe(run.config.rank)
    for x in universe:
        for y in universe:
            x_nf, y_nf = normalize(ZermeloLit(x)), normalize(ZermeloLit(y))
            classical = member_count_order(x, y)
            # Zermelo-only forms with equal cardinality share their signature
            ok = neg_ch_cmp(x_nf, y_nf) == classical == neg_chs_cmp(x_nf, y_nf)
            run.expect(ok, x, y)


@register_check("neg-chs-order-laws", "signature classes of the bounded form family over V{rank}, all triples")
def check_neg_chs_order_laws(run: CheckRun) -> None:
    classes = bounded_classes(run.config.rank)
    size = len(classes)
    verdicts = [[neg_chs_cmp(x, y) for y in classes] for x in classes]
    less = np.array([[v is Verdict.LESS for v in row] for row in verdicts], dtype=bool)
    equal = np.array([[v is Verdict.EQUAL for v in row] for row in verdicts], dtype=bool)

    for i, x in enumerate(classes):
        for j, y in enumerate(classes):
            v = verdicts[i][j]
            ok = (
                v is not Verdict.INCOMPARABLE
                and v == verdicts[j][i].flipped()
                and (i != j or v is Verdict.EQUAL)
            )
            if not ok:
                run.fail(x, y)

    composed = (less.astype(np.int64) @ less.astype(np.int64)) > 0
    violations = composed & ~less
    for i, k in zip(*np.nonzero(violations)):
        j = int(np.nonzero(less[i] & less[:, k])[0][0])
        run.fail(classes[int(i)], classes[j], classes[int(k)])
    # Signature classes are pairwise distinct
    off_diagonal = equal & ~np.eye(size, dtype=bool)
    for i, j in zip(*np.nonzero(off_diagonal)):
        run.fail(classes[int(i)], classes[int(j)])
    run.tested = size**3


@register_check("density", "seeded pairs x < y of empty-core-free forms over V{rank} (500 by default)", exhaustive=False)
def check_density(run: CheckRun) -> None:
    pool = empty_core_free(exhaustive_universe(_family_rank(run)))
    payloads = non_powered(exhaustive_universe(3))
    forms = generate_forms(pool, 2, 3, seed=run.rng.randrange(2**32), payloads=payloads, empty_rate=0.0)
    done = 0
    target = run.samples(500)
    while done < target:
        x, y = next(forms), next(forms)
        verdict = neg_chs_cmp(x, y)
        if verdict is Verdict.EQUAL:
            continue
        if verdict is Verdict.GREATER:
            x, y = y, x
        done += 1
        try:
            witness = between_witness(x, y)
        except WitnessUnavailableError:
            run.fail(x, y)
            continue
        ok = neg_chs_cmp(x, witness) is Verdict.LESS and neg_chs_cmp(witness, y) is Verdict.LESS
        run.expect(ok, x, y)


@register_check("density-chain", "seeded pairs x < y over V{rank}, chains of 4 witnesses (100 by default)", exhaustive=False)
def check_density_chain(run: CheckRun) -> None:
    pool = empty_core_free(exhaustive_universe(_family_rank(run)))
    payloads = non_powered(exhaustive_universe(3))
    forms = generate_forms(pool, 2, 3, seed=run.rng.randrange(2**32), payloads=payloads, empty_rate=0.0)
    done = 0
    target = run.samples(100)
    while done < target:
        x, y = next(forms), next(forms)
        verdict = neg_chs_cmp(x, y)
        if verdict is Verdict.EQUAL:
            continue
        if verdict is Verdict.GREATER:
            x, y = y, x
        done += 1
        chain = [x, *nested_density_chain(x, y, 4), y]
        ok = all(neg_chs_cmp(a, b) is Verdict.LESS for a, b in zip(chain, chain[1:]))
        run.expect(ok, x, y)
