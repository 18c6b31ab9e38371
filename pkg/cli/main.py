"""
Command-line interface.

    python -m cli enumerate [--r 3|4|5] [--format table|json]
    python -m cli verify (--all | --entry NAME | --family prism|antiprism [--max-n N])
    python -m cli oracle [--max-p P] [--diff]
    python -m cli realize (NAME | --family KIND --n N) [--out faces|json] [--path FILE]
    python -m cli catalog [--format table|json|csv]

Exit codes: 0 success, 1 a check failed, 2 bad usage.
"""
import logging
import sys
from pathlib import Path
from typing import Optional

import click
import structlog

from cli.config import CLIConfig, cli_config
from config.loader import reference_tables
from domain.case_analysis import enumerate_case_r3, enumerate_case_r4, enumerate_case_r5, full_catalog
from domain.catalog import UnknownEntryError, catalog_slugs, lookup, reference_catalog
from domain.oracle import MIN_DIFF_P, MIN_ORACLE_P, oracle_diff, oracle_enumerate
from pipelines import export
from pipelines.verification import VerificationPipeline
from realization.analysis import analyze
from realization.dispatcher import realize
from realization.operators import MIN_POLYGON

logger = structlog.get_logger()

EXIT_FAILED = 1

CASES = {
    "3": enumerate_case_r3,
    "4": enumerate_case_r4,
    "5": enumerate_case_r5,
}


def configure_logging(config: CLIConfig = cli_config) -> None:
    """structlog to stderr, so stdout carries only command output."""
    level = getattr(logging, config.log_level.upper(), logging.WARNING)
    structlog.configure(
        processors=[
            structlog.processors.TimeStamper(fmt="iso"),
            structlog.processors.add_log_level,
            structlog.processors.JSONRenderer() if config.log_format == "json"
            else structlog.dev.ConsoleRenderer(colors=False),
        ],
        wrapper_class=structlog.make_filtering_bound_logger(level),
        logger_factory=structlog.PrintLoggerFactory(file=sys.stderr),
        cache_logger_on_first_use=False,
    )


def _default(key: str, fallback: int) -> int:
    return int(reference_tables.verification_defaults.get(key, fallback))


def _entry(name: str, param_hint: str):
    try:
        return lookup(name)
    except UnknownEntryError as e:
        raise click.BadParameter(f"{e}; see --list-names", param_hint=param_hint) from e


@click.group(invoke_without_command=True)
@click.option("--list-names", is_flag=True, help="Print command-line names and display names.")
@click.pass_context
def cli(ctx: click.Context, list_names: bool):
    """Classify, realize and verify the Platonic and Archimedean solids."""
    configure_logging()
    if list_names:
        for slug, name in catalog_slugs().items():
            click.echo(f"{slug}\t{name}")
        ctx.exit(0)
    if ctx.invoked_subcommand is None:
        click.echo(ctx.get_help())


@cli.command("enumerate")
@click.option("--r", "r", type=click.Choice(sorted(CASES)), default=None,
              help="Only the case with this many faces at a vertex.")
@click.option("--format", "fmt", type=click.Choice(["table", "json"]), default="table", show_default=True)
def enumerate_command(r: Optional[str], fmt: str):
    """Run the case analysis."""
    if r is None:
        classifications = full_catalog()
    else:
        classifications = sorted(CASES[r](), key=lambda c: c.sort_key)
    click.echo(export.render_classifications(classifications, fmt), nl=False)


@cli.command("verify")
@click.option("--all", "verify_all", is_flag=True, help="Every catalog row and family members up to --max-n.")
@click.option("--entry", "entry_name", default=None, help="A single catalog entry.")
@click.option("--family", type=click.Choice(["prism", "antiprism"]), default=None)
@click.option("--max-n", type=click.IntRange(min=MIN_POLYGON), default=None,
              help="Largest family member to verify.")
@click.option("--format", "fmt", type=click.Choice(["table", "json"]), default="table", show_default=True)
@click.pass_context
def verify_command(ctx, verify_all: bool, entry_name: Optional[str], family: Optional[str],
                   max_n: Optional[int], fmt: str):
    """Check catalog rows against the enumeration, the formulas and their realizations."""
    if sum([verify_all, entry_name is not None, family is not None]) != 1:
        raise click.UsageError("Give exactly one of --all, --entry or --family.")

    n_min = _default("family_min_n", MIN_POLYGON)
    n_max = max_n if max_n is not None else _default("family_max_n", 12)
    pipeline = VerificationPipeline()

    if verify_all:
        results = pipeline.verify_all(n_min, n_max)
    else:
        entry = _entry(entry_name or family, "--entry" if entry_name else "--family")
        if entry.is_family:
            results = pipeline.verify_family(entry, n_min, n_max)
        else:
            results = pipeline.verify_entry(entry)

    click.echo(export.render_verification(results, fmt), nl=False)
    if not results:
        logger.error("No checks ran, the reference catalog is empty")
        ctx.exit(EXIT_FAILED)
    if not all(r.passed for r in results):
        ctx.exit(EXIT_FAILED)


@cli.command("oracle")
@click.option("--max-p", type=click.IntRange(min=MIN_ORACLE_P), default=None,
              help="Largest face degree swept.")
@click.option("--diff", is_flag=True, help="Compare with the case analysis and annotate the rest.")
@click.option("--format", "fmt", type=click.Choice(["table", "json"]), default="table", show_default=True)
@click.pass_context
def oracle_command(ctx, max_p: Optional[int], diff: bool, fmt: str):
    """Brute-force sweep of arithmetic-feasible vertex figures."""
    p_max = max_p if max_p is not None else _default("oracle_max_p", 20)
    if not diff:
        document = export.oracle_document(p_max, oracle_enumerate(p_max))
        click.echo(export.render_oracle(document, fmt), nl=False)
        return

    min_p = _default("diff_min_p", MIN_DIFF_P)
    if p_max < min_p:
        raise click.UsageError(f"--diff needs --max-p >= {min_p}.")
    report = oracle_diff(p_max, strict=False)
    click.echo(export.render_oracle(export.oracle_document(p_max, report.feasible, report), fmt), nl=False)
    if not report.complete:
        logger.error("Unexplained feasible figures", figures=[str(f) for f in report.unexplained])
        ctx.exit(EXIT_FAILED)


@cli.command("realize")
@click.argument("name", required=False)
@click.option("--family", type=click.Choice(["prism", "antiprism"]), default=None)
@click.option("--n", "n", type=click.IntRange(min=MIN_POLYGON), default=None, help="Family member.")
@click.option("--out", type=click.Choice(["faces", "json"]), default="faces", show_default=True)
@click.option("--path", type=click.Path(dir_okay=False, path_type=Path), default=None,
              help="Write the document here instead of stdout.")
@click.pass_context
def realize_command(ctx, name: Optional[str], family: Optional[str], n: Optional[int], out: str,
                    path: Optional[Path]):
    """Build a solid as a polyhedral map and export it."""
    if (name is None) == (family is None):
        raise click.UsageError("Give either NAME or --family.")
    if family is not None and n is None:
        raise click.UsageError("--family needs --n.")

    entry = _entry(name or family, "NAME" if name else "--family")
    if entry.is_family and n is None:
        raise click.UsageError(f"{entry.name} is a family; use --family {entry.slug} --n N.")
    if not entry.is_family and n is not None:
        raise click.UsageError("--n only applies to families.")

    m = realize(entry, n)
    report = analyze(m)
    document = export.render_faces(m) if out == "faces" else export.render_map_json(m, report)
    summary = export.render_map_summary(m, report)

    if path is None:
        click.echo(document, nl=False)
        click.echo(summary, nl=False, err=True)
    else:
        path.write_text(document, encoding="utf-8")
        click.echo(summary, nl=False)

    if not report.matches(entry.figure_at(n), entry.counts_at(n)):
        logger.error("Realized map does not match the catalog", entry=m.name, problems=list(report.problems))
        ctx.exit(EXIT_FAILED)


@cli.command("catalog")
@click.option("--format", "fmt", type=click.Choice(["table", "json", "csv"]), default="table", show_default=True)
def catalog_command(fmt: str):
    """Print the reference tables."""
    click.echo(export.render_catalog(reference_catalog(), fmt), nl=False)
