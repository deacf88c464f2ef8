"""Shared pytest fixtures and configuration."""

from typing import Callable, Iterator

import pytest

from invpow.calculus.hf_core import enumerate_universe, make_set, numeral
from invpow.config import get_settings
from invpow.models.forms import Component, Finite, NormalForm
from invpow.models.hfset import HfSet
from invpow.models.report import AuditConfig
from invpow.audit.base import list_checks

# Register the check modules in CHECK_MODULES order before any test module
# imports one of them directly during collection.
list_checks()


@pytest.fixture
def zero() -> HfSet:
    return numeral(0)


@pytest.fixture
def one() -> HfSet:
    return numeral(1)


@pytest.fixture
def three() -> HfSet:
    """Von Neumann 3 = {0, 1, 2}."""
    return numeral(3)


@pytest.fixture
def singleton_one() -> HfSet:
    """{1} = {{{}}}: the smallest non-powered set with a nonempty core."""
    return make_set([numeral(1)])


@pytest.fixture
def v3() -> tuple[HfSet, ...]:
    """All 16 sets of rank at most 3."""
    return enumerate_universe(3)


@pytest.fixture
def form() -> Callable[..., NormalForm]:
    """
    Build a normal form from a Zermelo set and (level, payload) pairs.

    Components are passed already in well-represented order.
    """

    def build(zermelo: HfSet, *components: tuple[int, HfSet]) -> NormalForm:
        return NormalForm(
            zermelo=Finite(zermelo),
            components=tuple(Component(level=level, payload=Finite(p)) for level, p in components),
        )

    return build


@pytest.fixture
def audit_config() -> AuditConfig:
    """Rank-2 config with small sample counts for fast check runs."""
    return AuditConfig(rank=2, samples=25, seed=42)


@pytest.fixture
def settings_env(monkeypatch: pytest.MonkeyPatch) -> Iterator[Callable[..., None]]:
    """Override INVPOW_ settings for one test and reset the cached instance."""

    def apply(**values: object) -> None:
        for key, value in values.items():
            monkeypatch.setenv(f"INVPOW_{key.upper()}", str(value))
        get_settings.cache_clear()

    get_settings.cache_clear()
    yield apply
    get_settings.cache_clear()
