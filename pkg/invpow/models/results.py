"""CLI configuration and command result models."""

from typing import List, Literal, Optional

from pydantic import BaseModel, Field

from invpow.models.enums import OrderKind, OutputFormat, Verdict


class CliConfig(BaseModel):
    """Resolved command-line invocation."""

    command: Literal["eval", "normalize", "cmp", "between", "audit"]
    order: Optional[OrderKind] = None
    expressions: List[str] = Field(default_factory=list)
    output_format: OutputFormat = OutputFormat.TEXT
    rank: int = Field(default=3, ge=0, le=4)
    samples: Optional[int] = Field(default=None, ge=1)
    seed: int = 42
    checks: List[str] = Field(default_factory=list)


class ComponentInfo(BaseModel):
    """Per-slot metadata of a normal form."""

    term: str
    rho: str
    tau: str


class EvalResult(BaseModel):
    """Output of ``invpow eval``."""

    input: str
    normalized: str
    level: Optional[int] = None  # None for union forms
    is_zermelo: bool
    card: Optional[str] = None  # Classical cardinality of Zermelo results
    ch_card: Optional[str] = None  # Only when the term lies in EZF
    slots: List[ComponentInfo] = Field(default_factory=list)


class CompareResult(BaseModel):
    """Output of ``invpow cmp``."""

    order: OrderKind
    left: str
    right: str
    verdict: Verdict


class WitnessResult(BaseModel):
    """Output of ``invpow between``."""

    left: str
    right: str
    witness: str
