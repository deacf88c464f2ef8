"""Check registry and the per-run state handed to every check."""

import importlib
import logging
import random
import time
from dataclasses import dataclass, field
from typing import Callable, Dict, Union

from invpow.config import get_settings
from invpow.errors import ResourceLimitError, UnknownCheckError
from invpow.models.forms import NormalForm
from invpow.models.hfset import HfSet
from invpow.models.report import AuditConfig, AuditReport
from invpow.models.terms import InvPow, NatBase, Pow, UnionOf, ZermeloLit
from invpow.utils.expr_lang import print_normal_form, print_term

logger = logging.getLogger(__name__)

Witness = Union[HfSet, NormalForm, ZermeloLit, NatBase, Pow, InvPow, UnionOf, int]

COUNTEREXAMPLE_SEPARATOR = "; "


def format_witness(value: Witness) -> str:
    """Print a counterexample part in expression syntax."""
    if isinstance(value, HfSet):
        return str(value)
    if isinstance(value, NormalForm):
        return print_normal_form(value)
    if isinstance(value, int):
        return str(value)
    return print_term(value)


class CheckRun:
    """
    Mutable state of one check evaluation: seeded RNG, counters and the
    failures kept so far.
    """

    def __init__(self, name: str, config: AuditConfig):
        self.name = name
        self.config = config
        # String seeds hash deterministically across processes
        self.rng = random.Random(f"{config.seed}/{name}")
        self.tested = 0
        self.failure_count = 0
        self.failures: list[str] = []

    def expect(self, ok: bool, *witnesses: Witness) -> bool:
        """
        Count one instance; on failure keep its witnesses as a counterexample.

        Returns:
            ``ok``, so callers can branch on it
        """
        self.tested += 1
        if not ok:
            self.failure_count += 1
            if len(self.failures) < self.config.max_failures:
                text = COUNTEREXAMPLE_SEPARATOR.join(format_witness(w) for w in witnesses)
                self.failures.append(text)
                logger.debug(f"{self.name}: counterexample {text}")
        return ok

    def fail(self, *witnesses: Witness) -> None:
        self.expect(False, *witnesses)

    def samples(self, default: int) -> int:
        return self.config.sample_count(default)


CheckFn = Callable[[CheckRun], None]


@dataclass(frozen=True)
class CheckEntry:
    """A registered check."""

    name: str
    domain: str  # May reference {rank}
    func: CheckFn = field(compare=False)
    exhaustive: bool = True  # Needs rank <= exhaustive_rank

    def describe(self, config: AuditConfig) -> str:
        return self.domain.format(rank=config.rank)


# Registry of checks, in registration order
CHECK_REGISTRY: Dict[str, CheckEntry] = {}


def register_check(name: str, domain: str, exhaustive: bool = True) -> Callable[[CheckFn], CheckFn]:
    """
    Register a check under ``name``.

    Args:
        name: Check identifier used on the command line
        domain: Human readable quantifier domain; ``{rank}`` is substituted
        exhaustive: Whether the check sweeps the universe and so needs a small rank

    Example:
        >>> @register_check("inverse", "nonempty X in V{rank}")
        ... def check_inverse(run: CheckRun) -> None: ...
    """

    def decorator(func: CheckFn) -> CheckFn:
        if name in CHECK_REGISTRY:
            raise ValueError(f"Check already registered: {name}")
        CHECK_REGISTRY[name] = CheckEntry(name=name, domain=domain, func=func, exhaustive=exhaustive)
        return func

    return decorator


# Check modules, imported in this order on first registry access
CHECK_MODULES = (
    "invpow.audit.checks_hf",
    "invpow.audit.checks_terms",
    "invpow.audit.checks_cardinality",
    "invpow.audit.checks_lang",
)


def _load_checks() -> None:
    """Import the check modules so that their decorators run."""
    for module in CHECK_MODULES:
        importlib.import_module(module)


def get_check(name: str) -> CheckEntry:
    """
    Look up a registered check.

    Raises:
        UnknownCheckError: If no check has this name
    """
    _load_checks()
    if name not in CHECK_REGISTRY:
        raise UnknownCheckError(
            f"Unknown check: {name}. Run 'invpow audit --list' for the registered checks"
        )
    return CHECK_REGISTRY[name]


def list_checks() -> list[str]:
    """Registered check names in registration order."""
    _load_checks()
    return list(CHECK_REGISTRY.keys())


def run_check(name: str, config: AuditConfig) -> AuditReport:
    """
    Evaluate one check.

    Raises:
        UnknownCheckError: If the check is not registered
        ResourceLimitError: If an exhaustive check is asked for a rank above
            ``exhaustive_rank``
    """
    entry = get_check(name)
    limit = get_settings().exhaustive_rank
    if entry.exhaustive and config.rank > limit:
        raise ResourceLimitError(
            f"Check {name} sweeps the universe exhaustively; rank {config.rank} exceeds {limit}"
        )

    run = CheckRun(name, config)
    logger.info(f"Running check {name} (rank {config.rank}, seed {config.seed})")
    start = time.perf_counter()
    entry.func(run)
    millis = (time.perf_counter() - start) * 1000

    if run.failure_count:
        logger.warning(f"Check {name} failed on {run.failure_count} of {run.tested} instances")
    return AuditReport(
        name=name,
        domain=entry.describe(config),
        tested=run.tested,
        failures=run.failures,
        failure_count=run.failure_count,
        seed=config.seed,
        millis=millis,
    )
