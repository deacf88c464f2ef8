"""Tests for Zermelo parts, components and normal forms."""

import pytest

from invpow.calculus.hf_core import make_set, numeral
from invpow.models.cardinals import SymCardinal
from invpow.models.forms import Component, Finite, NatTower, NormalForm
from invpow.models.hfset import EMPTY


def test_finite_part():
    part = Finite(numeral(3))
    assert part.cardinal == SymCardinal.fin(3)
    assert not part.is_empty
    assert Finite(EMPTY).is_empty
    assert str(part) == "{{},{{}},{{},{{}}}}"


def test_nat_tower():
    """P^k(N) has Beth(k) elements and prints as nested P."""
    assert NatTower(0).cardinal == SymCardinal.beth(0)
    assert NatTower(2).cardinal == SymCardinal.beth(2)
    assert str(NatTower(2)) == "P(P(N))"
    assert not NatTower(0).is_empty
    with pytest.raises(ValueError):
        NatTower(-1)


def test_component_validation():
    """Levels are positive and payloads nonempty; only N itself heads a tower payload."""
    payload = Finite(make_set([numeral(1)]))
    assert str(Component(level=2, payload=payload)) == "P^-2({{{}}})"
    with pytest.raises(ValueError):
        Component(level=0, payload=payload)
    with pytest.raises(ValueError):
        Component(level=1, payload=Finite(EMPTY))
    with pytest.raises(ValueError):
        Component(level=1, payload=NatTower(1))
    assert str(Component(level=1, payload=NatTower(0))) == "P^-1(N)"


def test_normal_form_defaults_and_printing():
    """An empty Zermelo part is omitted once components exist."""
    assert str(NormalForm()) == "{}"
    assert NormalForm().is_zermelo
    component = Component(level=1, payload=Finite(make_set([numeral(1)])))
    only_component = NormalForm(components=(component,))
    assert str(only_component) == "P^-1({{{}}})"
    mixed = NormalForm(zermelo=Finite(numeral(1)), components=(component, component))
    assert str(mixed) == "{{}} u P^-1({{{}}}) u P^-1({{{}}})"
    assert mixed.slot_count == 3
    assert not mixed.is_zermelo
