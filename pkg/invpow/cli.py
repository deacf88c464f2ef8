"""
Command-line entry point.

Exit codes: 0 when the command succeeded (whatever the verdict), 1 for
domain, parse and usage errors, 2 when an audit found failures.
"""

import json
import logging
import sys
from typing import Any, Optional

import click
from pydantic import BaseModel

from invpow.audit.base import get_check, list_checks
from invpow.audit.runner import run_suite, suite_passed
from invpow.calculus.cardinality import between_witness, ch_card, ch_cmp, neg_ch_cmp, neg_chs_cmp, rho, slots, tau
from invpow.calculus.term_calculus import level_of, normalize
from invpow.config import get_settings
from invpow.errors import InvPowError, OutsideEZFError, UndefinedLevelError
from invpow.models.enums import OrderKind, OutputFormat, Verdict
from invpow.models.report import AuditConfig, AuditReport
from invpow.models.results import CliConfig, CompareResult, ComponentInfo, EvalResult, WitnessResult
from invpow.utils.expr_lang import parse, print_normal_form

logger = logging.getLogger(__name__)

EXIT_ERROR = 1
EXIT_AUDIT_FAILED = 2

FORMAT_OPTION = click.option(
    "--format",
    "output_format",
    type=click.Choice([f.value for f in OutputFormat]),
    default=OutputFormat.TEXT.value,
    show_default=True,
    help="Output format",
)


class InvPowGroup(click.Group):
    """Click group that reports usage errors with exit code 1."""

    def make_context(self, *args: Any, **kwargs: Any) -> click.Context:
        try:
            return super().make_context(*args, **kwargs)
        except click.UsageError as e:
            e.exit_code = EXIT_ERROR
            raise

    def invoke(self, ctx: click.Context) -> Any:
        try:
            return super().invoke(ctx)
        except click.UsageError as e:
            e.exit_code = EXIT_ERROR
            raise


def _configure_logging(verbose: bool) -> None:
    level = logging.DEBUG if verbose else getattr(logging, get_settings().log_level.upper(), logging.WARNING)
    logging.basicConfig(
        level=level,
        format="%(asctime)s %(levelname)s %(name)s: %(message)s",
        stream=sys.stderr,
        force=True,
    )


def _dump(data: Any) -> str:
    return json.dumps(data, sort_keys=True, ensure_ascii=False)


def _emit(result: BaseModel, output_format: str, text: str) -> None:
    if output_format == OutputFormat.JSON.value:
        click.echo(_dump(result.model_dump(mode="json")))
    else:
        click.echo(text)


def _fail(message: str) -> None:
    click.echo(f"Error: {message}", err=True)
    sys.exit(EXIT_ERROR)


def evaluate(expr: str) -> EvalResult:
    """
    Normalize ``expr`` and collect its level, cardinalities and slot metadata.

    Raises:
        InvPowError: If the expression does not parse or normalize
    """
    term = parse(expr)
    nf = normalize(term)
    try:
        level: Optional[int] = level_of(term)
    except UndefinedLevelError:
        level = None
    try:
        ch: Optional[str] = str(ch_card(term))
    except OutsideEZFError:
        ch = None
    return EvalResult(
        input=expr,
        normalized=print_normal_form(nf),
        level=level,
        is_zermelo=nf.is_zermelo,
        card=str(nf.zermelo.cardinal) if nf.is_zermelo else None,
        ch_card=ch,
        slots=[ComponentInfo(term=str(s), rho=str(rho(s)), tau=str(tau(s))) for s in slots(nf)],
    )


def compare(left: str, right: str, order: OrderKind) -> Verdict:
    """Compare two expressions in the selected extended cardinality order."""
    a, b = parse(left), parse(right)
    if order is OrderKind.CH:
        return ch_cmp(a, b)
    x, y = normalize(a), normalize(b)
    if order is OrderKind.NEG_CH:
        return neg_ch_cmp(x, y)
    return neg_chs_cmp(x, y)


@click.group(cls=InvPowGroup)
@click.option("-v", "--verbose", is_flag=True, help="Debug logging on stderr")
def main(verbose: bool) -> None:
    """Symbolic set calculus with inverse powersets."""
    _configure_logging(verbose)


@main.command("eval")
@click.argument("expr")
@FORMAT_OPTION
def eval_cmd(expr: str, output_format: str) -> None:
    """Normalize EXPR and print its level and cardinalities."""
    config = CliConfig(command="eval", expressions=[expr], output_format=output_format)
    try:
        result = evaluate(config.expressions[0])
    except InvPowError as e:
        _fail(str(e))
        return

    lines = [f"normalized: {result.normalized}", f"level: {'undefined' if result.level is None else result.level}"]
    if result.card is not None:
        lines.append(f"card: {result.card}")
    if result.ch_card is not None:
        lines.append(f"ch_card: {result.ch_card}")
    for i, info in enumerate(result.slots):
        lines.append(f"slot {i}: {info.term} rho={info.rho} tau={info.tau}")
    _emit(result, config.output_format.value, "\n".join(lines))


@main.command("normalize")
@click.argument("expr")
def normalize_cmd(expr: str) -> None:
    """Print only the canonical normal form of EXPR."""
    try:
        click.echo(print_normal_form(normalize(parse(expr))))
    except InvPowError as e:
        _fail(str(e))


@main.command("cmp")
@click.argument("left")
@click.argument("right")
@click.option(
    "--order",
    type=click.Choice([o.value for o in OrderKind]),
    required=True,
    help="Extended cardinality order",
)
@FORMAT_OPTION
def cmp_cmd(left: str, right: str, order: str, output_format: str) -> None:
    """Compare LEFT and RIGHT; prints lt, eq, gt or incomparable."""
    config = CliConfig(command="cmp", order=order, expressions=[left, right], output_format=output_format)
    order_kind = OrderKind(order)
    try:
        verdict = compare(left, right, order_kind)
    except InvPowError as e:
        _fail(str(e))
        return
    result = CompareResult(order=order_kind, left=left, right=right, verdict=verdict)
    _emit(result, config.output_format.value, verdict.value)


@main.command("between")
@click.argument("left")
@click.argument("right")
@FORMAT_OPTION
def between_cmd(left: str, right: str, output_format: str) -> None:
    """Print a form strictly between LEFT and RIGHT in the negchs order."""
    config = CliConfig(command="between", expressions=[left, right], output_format=output_format)
    try:
        witness = between_witness(normalize(parse(left)), normalize(parse(right)))
    except InvPowError as e:
        _fail(f"{type(e).__name__}: {e}")
        return
    text = print_normal_form(witness)
    _emit(WitnessResult(left=left, right=right, witness=text), config.output_format.value, text)


def _report_line(report: AuditReport, timings: bool) -> str:
    line = f"{report.status.value.upper():5} {report.name}: {report.tested} tested, {report.failure_count} failed ({report.domain})"
    if timings and report.millis is not None:
        line += f" [{report.millis:.1f} ms]"
    if report.error is not None:
        line += f"\n      {report.error}"
    for failure in report.failures:
        line += f"\n      counterexample: {failure}"
    return line


@main.command("audit")
@click.option("--rank", type=click.IntRange(0, 4), default=3, show_default=True, help="Universe rank")
@click.option("--samples", type=click.IntRange(min=1), default=None, help="Sample count for randomized checks")
@click.option("--seed", type=int, default=None, help="Seed (defaults to INVPOW_DEFAULT_SEED)")
@click.option("--check", "checks", multiple=True, help="Run only this check; repeatable")
@FORMAT_OPTION
@click.option("--timings", is_flag=True, help="Report elapsed milliseconds per check")
@click.option("--workers", type=click.IntRange(min=1), default=None, help="Worker processes")
@click.option("--list", "list_only", is_flag=True, help="List registered checks and exit")
def audit_cmd(
    rank: int,
    samples: Optional[int],
    seed: Optional[int],
    checks: tuple[str, ...],
    output_format: str,
    timings: bool,
    workers: Optional[int],
    list_only: bool,
) -> None:
    """Run the registered checks (all by default)."""
    config = CliConfig(
        command="audit",
        output_format=output_format,
        rank=rank,
        samples=samples,
        seed=seed if seed is not None else get_settings().default_seed,
        checks=list(checks),
    )
    audit_config = AuditConfig(rank=config.rank, samples=config.samples, seed=config.seed)

    if list_only:
        for name in list_checks():
            click.echo(f"{name}: {get_check(name).describe(audit_config)}")
        return

    try:
        reports = run_suite(audit_config, names=config.checks or None, workers=workers)
    except InvPowError as e:
        _fail(str(e))
        return

    logger.info(f"Audit finished: {sum(r.passed for r in reports)} of {len(reports)} checks passed")
    for report in reports:
        if config.output_format is OutputFormat.JSON:
            click.echo(_dump(report.to_json_dict(timings=timings)))
        else:
            click.echo(_report_line(report, timings))

    if not suite_passed(reports):
        sys.exit(EXIT_AUDIT_FAILED)


if __name__ == "__main__":
    main()
