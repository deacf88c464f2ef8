"""Run many checks, sequentially or fanned out over worker processes."""

import asyncio
import logging
from concurrent.futures import ProcessPoolExecutor
from typing import Optional, Sequence

from invpow.audit.base import get_check, list_checks, run_check
from invpow.config import get_settings
from invpow.errors import ResourceLimitError
from invpow.models.report import AuditConfig, AuditReport

logger = logging.getLogger(__name__)


def _resolve(names: Optional[Sequence[str]]) -> list[str]:
    registered = list_checks()
    if not names:
        return registered
    for name in names:
        get_check(name)  # raises UnknownCheckError before any check runs
    return [n for n in registered if n in names]


def run_guarded(name: str, config: AuditConfig) -> AuditReport:
    """Run one check; a resource limit becomes an error report instead of aborting the suite."""
    try:
        return run_check(name, config)
    except ResourceLimitError as e:
        logger.warning(f"Check {name} skipped: {e}")
        return AuditReport(name=name, domain=get_check(name).describe(config), seed=config.seed, error=str(e))


def run_suite(
    config: AuditConfig,
    names: Optional[Sequence[str]] = None,
    workers: Optional[int] = None,
) -> list[AuditReport]:
    """
    Run the named checks (all by default) and return their reports in
    registry order.

    Args:
        config: Audit configuration shared by every check
        names: Check names; None or empty runs the whole registry
        workers: Worker processes; defaults to ``InvPowSettings.workers``
    """
    return asyncio.run(run_suite_async(config, names, workers))


async def run_suite_async(
    config: AuditConfig,
    names: Optional[Sequence[str]] = None,
    workers: Optional[int] = None,
) -> list[AuditReport]:
    """Async variant of :func:`run_suite`."""
    selected = _resolve(names)
    workers = workers or get_settings().workers
    logger.info(f"Running {len(selected)} checks with {workers} worker(s)")

    if workers <= 1:
        return [run_guarded(name, config) for name in selected]

    loop = asyncio.get_running_loop()
    with ProcessPoolExecutor(max_workers=workers) as pool:
        futures = [loop.run_in_executor(pool, run_guarded, name, config) for name in selected]
        # gather keeps submission order, so the merged reports stay deterministic
        return list(await asyncio.gather(*futures))


def suite_passed(reports: Sequence[AuditReport]) -> bool:
    return all(report.passed for report in reports)
