"""Verification harness: registered checks, oracles, generators and the suite runner."""

from invpow.audit.base import CHECK_REGISTRY, CheckRun, get_check, list_checks, register_check, run_check
from invpow.audit.oracles import brute_force_powered
from invpow.audit.runner import run_guarded, run_suite, run_suite_async, suite_passed

__all__ = [
    "CHECK_REGISTRY",
    "CheckRun",
    "register_check",
    "get_check",
    "list_checks",
    "run_check",
    "brute_force_powered",
    "run_guarded",
    "run_suite",
    "run_suite_async",
    "suite_passed",
]
