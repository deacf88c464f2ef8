"""Tests for term normalization and the extended relations."""

import pytest
from hypothesis import given
from hypothesis import strategies as st

from invpow.calculus.hf_core import enumerate_universe, is_member, is_subset_hf, make_set, numeral, powerset
from invpow.calculus.term_calculus import (
    apply_inv_pow,
    apply_pow,
    as_single,
    ext_equal,
    ext_subset,
    in_tower,
    is_zermelo,
    level_of,
    make_component,
    normalize,
    normalize_many,
    same_level,
    sort_components,
    subset_member,
    subset_members,
    term_is_powered,
    to_term,
)
from invpow.errors import DomainError, RelationUndefinedError, UndefinedLevelError, UnsupportedOperandError
from invpow.models.forms import Component, Finite, NatTower, NormalForm
from invpow.models.hfset import EMPTY
from invpow.models.terms import InvPow, NatBase, Pow, UnionOf, ZermeloLit, inv_pow_n, pow_n, union_of

V3 = enumerate_universe(3)
nonempty_v3 = st.sampled_from([x for x in V3 if not x.is_empty])
v3_sets = st.sampled_from(V3)


def lit(x):
    return ZermeloLit(x)


class TestApplyPow:
    def test_cancels_inverse(self, three):
        assert apply_pow(InvPow(lit(three))) == lit(three)

    def test_materializes_literals(self):
        """P(2) = {0, 1, {1}, 2}."""
        expected = make_set([numeral(0), numeral(1), make_set([numeral(1)]), numeral(2)])
        assert apply_pow(lit(numeral(2))) == lit(expected)

    def test_increments_tower(self):
        assert apply_pow(NatBase()) == Pow(NatBase())
        assert normalize(apply_pow(Pow(NatBase()))).zermelo == NatTower(2)

    def test_validates_the_cancelled_inverse(self, one):
        with pytest.raises(DomainError):
            apply_pow(inv_pow_n(lit(one), 2))

    def test_rejects_unions(self, three, singleton_one):
        with pytest.raises(UnsupportedOperandError):
            apply_pow(union_of(lit(three), InvPow(lit(singleton_one))))


class TestApplyInvPow:
    def test_strips_powered_literal(self, three):
        """P^-1(P({a,b,c})) = {a,b,c}."""
        assert apply_inv_pow(lit(powerset(three))) == lit(three)
        assert apply_inv_pow(lit(powerset(numeral(2)))) == lit(numeral(2))

    def test_non_powered_literal_gets_level_one(self, three):
        assert apply_inv_pow(lit(three)) == InvPow(lit(three))
        assert apply_inv_pow(InvPow(lit(three))) == inv_pow_n(lit(three), 2)

    def test_validates_the_cancelled_power(self, one):
        with pytest.raises(DomainError):
            apply_inv_pow(Pow(inv_pow_n(lit(one), 2)))

    def test_empty_set_is_outside_domain(self):
        with pytest.raises(DomainError):
            apply_inv_pow(lit(EMPTY))

    def test_rejects_unions(self, three, one):
        with pytest.raises(UnsupportedOperandError):
            apply_inv_pow(union_of(lit(three), lit(one)))


class TestNormalize:
    def test_strip_steps(self, three):
        assert normalize(inv_pow_n(pow_n(lit(three), 2), 2)) == NormalForm(zermelo=Finite(three))

    def test_components_sorted_by_level(self, three, singleton_one):
        nf = normalize(union_of(lit(three), InvPow(lit(singleton_one)), inv_pow_n(lit(three), 2)))
        assert nf.zermelo == Finite(three)
        assert nf.components == (
            Component(level=1, payload=Finite(singleton_one)),
            Component(level=2, payload=Finite(three)),
        )

    def test_equal_levels_sorted_by_weight(self, three, singleton_one):
        nf = normalize(union_of(InvPow(lit(singleton_one)), InvPow(lit(three))))
        assert nf.zermelo == Finite(EMPTY)
        assert [c.payload for c in nf.components] == [Finite(three), Finite(singleton_one)]

    def test_duplicates_are_kept(self, singleton_one):
        part = InvPow(lit(singleton_one))
        assert len(normalize(union_of(part, part)).components) == 2

    def test_zermelo_parts_are_merged(self, one, three):
        assert normalize(union_of(lit(one), lit(make_set([three])))).zermelo == Finite(make_set([EMPTY, three]))
        assert normalize_many([lit(one), lit(numeral(2))]) == NormalForm(zermelo=Finite(numeral(2)))

    def test_empty_core_is_a_domain_error(self, one):
        """P^-2(1) strips to P^-1 of the empty set."""
        with pytest.raises(DomainError):
            normalize(inv_pow_n(lit(one), 2))
        with pytest.raises(DomainError):
            normalize(Pow(InvPow(lit(EMPTY))))

    def test_empty_core_inside_a_chain_is_a_domain_error(self, one):
        """A later P does not rescue an undefined inner P^-1."""
        with pytest.raises(DomainError):
            normalize(Pow(inv_pow_n(lit(one), 2)))
        with pytest.raises(DomainError):
            normalize(Pow(inv_pow_n(lit(numeral(2)), 3)))
        with pytest.raises(DomainError):
            normalize(pow_n(InvPow(lit(EMPTY)), 2))

    def test_stripping_to_the_empty_set_is_allowed(self, one):
        assert normalize(InvPow(lit(one))) == NormalForm(zermelo=Finite(EMPTY))
        assert normalize(Pow(inv_pow_n(lit(numeral(2)), 2))) == NormalForm(zermelo=Finite(one))
        assert normalize(inv_pow_n(Pow(lit(EMPTY)), 1)) == NormalForm(zermelo=Finite(EMPTY))

    def test_powers_of_inverses_cancel_first(self, three):
        assert normalize(Pow(InvPow(lit(three)))) == NormalForm(zermelo=Finite(three))

    def test_nat_tower(self):
        assert normalize(InvPow(Pow(NatBase()))) == NormalForm(zermelo=NatTower(0))
        assert normalize(InvPow(NatBase())).components == (Component(level=1, payload=NatTower(0)),)
        assert normalize(inv_pow_n(Pow(NatBase()), 2)).components == (Component(level=1, payload=NatTower(0)),)
        assert normalize(union_of(NatBase(), pow_n(NatBase(), 2))) == NormalForm(zermelo=NatTower(2))
        assert normalize(union_of(lit(EMPTY), NatBase())).zermelo == NatTower(0)

    def test_mixed_towers_rejected(self, three):
        with pytest.raises(UnsupportedOperandError):
            normalize(union_of(lit(three), NatBase()))
        with pytest.raises(UnsupportedOperandError):
            normalize(union_of(NatBase(), InvPow(lit(three))))

    def test_union_under_operator_rejected(self, three, one):
        with pytest.raises(UnsupportedOperandError):
            normalize(Pow(UnionOf((lit(three), lit(one)))))

    def test_to_term_and_as_single(self, three, singleton_one):
        assert to_term(NormalForm()) == lit(EMPTY)
        nf = normalize(union_of(lit(three), InvPow(lit(singleton_one))))
        assert to_term(nf) == union_of(lit(three), InvPow(lit(singleton_one)))
        assert as_single(nf) is None
        only = normalize(InvPow(NatBase()))
        assert to_term(only) == InvPow(NatBase())
        assert as_single(only) == Component(level=1, payload=NatTower(0))


def test_make_component_validation(three, one):
    assert make_component(2, Finite(three)) == Component(level=2, payload=Finite(three))
    with pytest.raises(DomainError):
        make_component(1, Finite(EMPTY))
    with pytest.raises(ValueError):
        make_component(1, Finite(one))


def test_sort_components_is_well_represented(three, singleton_one):
    low = Component(level=2, payload=Finite(three))
    light = Component(level=1, payload=Finite(singleton_one))
    heavy = Component(level=1, payload=Finite(three))
    assert sort_components([low, light, heavy]) == (heavy, light, low)


class TestRelations:
    def test_in_tower(self, three, singleton_one):
        assert in_tower(three, 0)
        assert not in_tower(singleton_one, 0)
        assert in_tower(singleton_one, 1)

    def test_subset_member_on_zermelo_sets(self, one, three):
        assert subset_member(lit(one), lit(numeral(2)), 1)
        assert subset_member(lit(one), lit(three), 0)
        assert not subset_member(lit(three), lit(three), 0)
        with pytest.raises(RelationUndefinedError):
            subset_member(lit(one), lit(three), 2)

    def test_subset_member_on_level_one(self, one, three):
        """A in_1 P^-1(X) iff A in X."""
        assert subset_member(lit(one), InvPow(lit(three)), 1)
        assert not subset_member(lit(three), InvPow(lit(three)), 1)
        assert subset_member(lit(make_set([one])), InvPow(lit(three)), 2)

    def test_subset_member_on_nat(self, three, singleton_one):
        assert subset_member(lit(three), NatBase(), 0)
        assert not subset_member(lit(singleton_one), NatBase(), 0)
        assert subset_member(lit(three), NatBase(), 1)

    def test_subset_member_undefined(self, one, three, singleton_one):
        with pytest.raises(RelationUndefinedError):
            subset_member(InvPow(lit(three)), lit(three), 1)
        with pytest.raises(RelationUndefinedError):
            subset_member(lit(one), union_of(lit(three), InvPow(lit(singleton_one))), 1)
        with pytest.raises(ValueError):
            subset_member(lit(one), lit(three), -1)

    def test_subset_members(self, three, one):
        assert subset_members(InvPow(lit(three))) == three.elements
        assert subset_members(lit(one)) == (EMPTY, one)
        with pytest.raises(UnsupportedOperandError):
            subset_members(InvPow(NatBase()))

    def test_is_zermelo(self, three):
        assert is_zermelo(InvPow(Pow(lit(three))))
        assert not is_zermelo(InvPow(lit(three)))
        assert is_zermelo(lit(EMPTY))

    def test_level_of(self, three, singleton_one):
        assert level_of(lit(three)) == 0
        assert level_of(InvPow(lit(three))) == 1
        assert level_of(inv_pow_n(Pow(lit(three)), 3)) == 2
        with pytest.raises(UndefinedLevelError):
            level_of(union_of(lit(three), InvPow(lit(singleton_one))))

    def test_same_level(self, three, singleton_one):
        assert same_level(InvPow(lit(three)), InvPow(lit(singleton_one)))
        assert not same_level(lit(three), InvPow(lit(three)))
        assert not same_level(union_of(lit(three), InvPow(lit(three))), lit(three))

    def test_ext_subset(self, three, singleton_one):
        assert ext_subset(InvPow(lit(singleton_one)), InvPow(lit(three)))
        assert not ext_subset(InvPow(lit(three)), InvPow(lit(singleton_one)))
        assert ext_subset(lit(three), NatBase())
        assert ext_subset(NatBase(), Pow(NatBase()))
        assert not ext_subset(Pow(NatBase()), NatBase())

    def test_ext_subset_undefined(self, three, singleton_one):
        with pytest.raises(RelationUndefinedError):
            ext_subset(lit(three), InvPow(lit(three)))
        with pytest.raises(RelationUndefinedError):
            ext_subset(InvPow(lit(three)), inv_pow_n(lit(three), 2))
        with pytest.raises(RelationUndefinedError):
            ext_subset(union_of(lit(three), InvPow(lit(singleton_one))), lit(three))

    def test_ext_equal(self, three, singleton_one):
        a, b = lit(three), InvPow(lit(singleton_one))
        assert ext_equal(union_of(a, b), union_of(b, a))
        assert not ext_equal(lit(three), InvPow(lit(three)))
        assert ext_equal(InvPow(Pow(lit(three))), lit(three))

    def test_term_is_powered(self, three):
        assert term_is_powered(NatBase()) is None
        assert term_is_powered(Pow(NatBase())) is True
        assert term_is_powered(lit(numeral(2))) is True
        assert term_is_powered(lit(three)) is False
        assert term_is_powered(InvPow(lit(three))) is False


@given(nonempty_v3)
def test_inverse_round_trips(x):
    assert normalize(InvPow(Pow(lit(x)))) == NormalForm(zermelo=Finite(x))
    assert normalize(Pow(InvPow(lit(x)))) == NormalForm(zermelo=Finite(x))
    assert normalize(apply_pow(apply_inv_pow(lit(x)))) == normalize(lit(x))


@given(v3_sets, v3_sets)
def test_subset_assignment(a, x):
    assert subset_member(lit(a), lit(x), 1) == is_subset_hf(a, x)


@given(v3_sets, nonempty_v3)
def test_inverse_powerset_membership(a, x):
    assert subset_member(lit(a), InvPow(lit(x)), 1) == is_member(a, x)


@given(nonempty_v3, nonempty_v3)
def test_inverse_extensionality(x, y):
    assert ext_equal(InvPow(lit(x)), InvPow(lit(y))) == (x == y)


@given(st.lists(st.tuples(st.integers(0, 2), nonempty_v3), min_size=1, max_size=4), st.randoms())
def test_normalize_is_idempotent_and_order_free(parts, rnd):
    """Levels of zero are Zermelo parts; the rest become components when not stripped away."""
    terms = [inv_pow_n(lit(x), level) for level, x in parts]
    try:
        nf = normalize(union_of(*terms))
    except DomainError:
        return
    shuffled = list(terms)
    rnd.shuffle(shuffled)
    assert normalize(union_of(*shuffled)) == nf
    assert normalize(to_term(nf)) == nf
