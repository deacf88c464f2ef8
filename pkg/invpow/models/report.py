"""Audit configuration and report models."""

from typing import List, Optional

from pydantic import BaseModel, Field

from invpow.models.enums import CheckStatus


class AuditConfig(BaseModel):
    """Per-run audit knobs."""

    rank: int = Field(default=3, ge=0, le=4)  # Universe rank for exhaustive domains
    samples: Optional[int] = Field(default=None, ge=1)  # Overrides each check's default sample count
    seed: int = 42
    max_failures: int = Field(default=25, ge=1)  # Counterexamples kept per check

    def sample_count(self, default: int) -> int:
        """Return the configured sample count, or the check's default."""
        return self.samples if self.samples is not None else default


class AuditReport(BaseModel):
    """
    Outcome of one registered check.

    ``failures`` holds counterexamples in canonical expression syntax so they
    can be re-parsed and re-checked under the same seed.
    """

    name: str
    domain: str  # Quantifier domain description
    tested: int = 0
    failures: List[str] = Field(default_factory=list)
    failure_count: int = 0  # Total failures, including ones not kept in `failures`
    seed: int
    millis: Optional[float] = None
    error: Optional[str] = None

    @property
    def status(self) -> CheckStatus:
        if self.error is not None:
            return CheckStatus.ERROR
        return CheckStatus.PASS if self.failure_count == 0 else CheckStatus.FAIL

    @property
    def passed(self) -> bool:
        return self.status is CheckStatus.PASS

    def to_json_dict(self, timings: bool = False) -> dict:
        """Serializable form; ``millis`` is null unless timings are requested."""
        data = {
            "name": self.name,
            "domain": self.domain,
            "tested": self.tested,
            "failures": list(self.failures),
            "seed": self.seed,
            "millis": round(self.millis, 3) if timings and self.millis is not None else None,
        }
        if self.error is not None:
            data["error"] = self.error
        if self.failure_count > len(self.failures):
            data["failures_truncated"] = self.failure_count - len(self.failures)
        return data
