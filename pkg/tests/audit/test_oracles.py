"""Tests for the brute-force oracles."""

import pytest

from invpow.audit.oracles import brute_force_powered, member_count_order, powered_by_closure, subsets_via_members
from invpow.calculus.hf_core import enumerate_universe, is_powered, numeral, powerset
from invpow.models.enums import Verdict
from invpow.models.hfset import EMPTY


def test_brute_force_powered_examples(three):
    assert brute_force_powered(numeral(2), 2)
    assert not brute_force_powered(three, 3)
    assert not brute_force_powered(EMPTY, 1)
    assert brute_force_powered(powerset(three), 3)


def test_brute_force_needs_enough_rank(three):
    with pytest.raises(ValueError):
        brute_force_powered(three, 1)


def test_oracles_agree_with_closed_form_on_v3():
    for x in enumerate_universe(3):
        assert brute_force_powered(x, max(x.rank - 1, 0)) == is_powered(x) == powered_by_closure(x)


def test_subsets_via_members(one, three, singleton_one):
    assert subsets_via_members(one, three)
    assert not subsets_via_members(singleton_one, one)
    assert subsets_via_members(EMPTY, EMPTY)


def test_member_count_order(one, three, singleton_one):
    assert member_count_order(one, three) is Verdict.LESS
    assert member_count_order(three, one) is Verdict.GREATER
    assert member_count_order(one, singleton_one) is Verdict.EQUAL
