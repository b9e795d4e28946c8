"""Command-line interface for sdcodes.

Commands:
    enumerate   all self-dual codes for (s, m), as JSON lines, CSV or a table
    verify      check a JSON-lines stream of codes for self-duality
    table1      reproduce the s=3, m=1 classification and diff it against the printed table
    count       the closed-form counts N and N'
    oracle      brute-force cross-checks at small sizes
    config      show or initialise the configuration file

Exit codes: 0 success, 1 verification failure, 2 usage or parse error,
3 budget exceeded.
"""

from __future__ import annotations

import json
import logging
import sys
from collections.abc import Iterator
from contextlib import contextmanager
from dataclasses import dataclass
from enum import Enum
from pathlib import Path
from typing import Annotated, NoReturn, TextIO

import numpy as np
import typer
import yaml
from rich import box
from rich.console import Console
from rich.logging import RichHandler
from rich.table import Table

from sdcodes._codec import (
    code_label,
    document_from_code,
    format_code,
    generators_from_document,
    write_csv,
)
from sdcodes._duality import is_self_dual
from sdcodes._enumerate import CountReport, SelfDualCode, count_N, count_Nprime, enumerate_all
from sdcodes._field import MAX_M, FieldCtx, field_ctx
from sdcodes._oracle import oracle_check, oracle_exhaustive, sample_specs, verify_generators
from sdcodes._table import TABLE_M, TABLE_S, printed_split, table1_diff
from sdcodes._version import __version__
from sdcodes_core import (
    BudgetExceededError,
    ConfigError,
    DocumentError,
    Family,
    InconsistencyError,
    SdcodesConfig,
    SdcodesError,
    parse_bits,
    read_documents,
)

console = Console()
err_console = Console(stderr=True)
logger = logging.getLogger("sdcodes.cli")

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_USAGE = 2
EXIT_BUDGET = 3

app = typer.Typer(
    name="sdcodes",
    help="Self-dual cyclic codes of length 2^s over F_{2^m}[u]/(u^3)",
    no_args_is_help=True,
)


class OutputFormat(str, Enum):
    """Enumeration output format."""

    json = "json"
    csv = "csv"
    table = "table"


class OracleMode(str, Enum):
    """Which brute-force check to run."""

    exhaustive = "exhaustive"
    sample = "sample"


@dataclass
class CliState:
    config: SdcodesConfig
    verbose: bool = False


def _version_callback(value: bool) -> None:
    """Show version info and exit."""
    if value:
        console.print(f"[bold]sdcodes[/bold] {__version__}")
        raise typer.Exit()


def _fail(message: str, code: int) -> NoReturn:
    err_console.print(f"[red]Error:[/red] {message}")
    raise typer.Exit(code)


@contextmanager
def _exit_codes() -> Iterator[None]:
    """Map library errors onto exit codes."""
    try:
        yield
    except BudgetExceededError as e:
        _fail(str(e), EXIT_BUDGET)
    except InconsistencyError as e:
        _fail(f"internal inconsistency: {e}", EXIT_FAILED)
    except SdcodesError as e:
        _fail(str(e), EXIT_USAGE)


def setup_logging(level: str) -> None:
    """Send library logs to stderr through rich."""
    handler = RichHandler(console=err_console, show_path=False, show_time=False)
    logging.basicConfig(level=level, format="%(message)s", handlers=[handler], force=True)


@app.callback()
def _app_callback(
    ctx: typer.Context,
    version: Annotated[
        bool,
        typer.Option(
            "--version",
            callback=_version_callback,
            is_eager=True,
            help="Show version and exit",
        ),
    ] = False,
    config_path: Annotated[
        Path | None,
        typer.Option(
            "--config", "-c", help="Config file (default: ~/.config/sdcodes/config.yaml)"
        ),
    ] = None,
    verbose: Annotated[bool, typer.Option("--verbose", help="Log at DEBUG level")] = False,
) -> None:
    """Self-dual cyclic codes of length 2^s over F_{2^m}[u]/(u^3)."""
    try:
        config = SdcodesConfig.load(config_path)
    except ConfigError as e:
        _fail(str(e), EXIT_USAGE)
    setup_logging("DEBUG" if verbose else config.logging.level)
    ctx.obj = CliState(config=config, verbose=verbose)


def _state(ctx: typer.Context) -> CliState:
    if isinstance(ctx.obj, CliState):
        return ctx.obj
    return CliState(config=SdcodesConfig.load())


def _check_sm(s: int, m: int) -> None:
    if s < 1:
        _fail(f"s must be >= 1, got {s}", EXIT_USAGE)
    if not 1 <= m <= MAX_M:
        _fail(f"m must be in 1..{MAX_M}, got {m}", EXIT_USAGE)


def _field(state: CliState, m: int, modulus: str | None) -> FieldCtx:
    """Field from --modulus, else the config override, else the built-in table."""
    bits = parse_bits(modulus) if modulus else state.config.base_field.modulus_bits(m)
    if bits is None:
        return field_ctx(m)
    if len(bits) != m + 1:
        _fail(f"modulus {''.join(map(str, bits))} does not have degree {m}", EXIT_USAGE)
    return FieldCtx.from_bits(bits)


def _print_report(report: CountReport, out: Console) -> None:
    out.print(
        f"[bold]s={report.s}, m={report.m}:[/bold] "
        f"{report.count_type4} + {report.count_N} + {report.count_Nprime} = {report.total}"
    )
    out.print(
        f"  type 4: {report.count_type4}   h1 = 0 (N): {report.count_N}   "
        f"h1 unit (N'): {report.count_Nprime}"
    )
    for (a, t1, t2), tau in report.cell_totals().items():
        out.print(f"  [dim]cell a={a} t1={t1} t2={t2}: {tau}[/dim]")


_FAMILY_TITLES = {
    Family.type4: "-",
    Family.h1zero: "h1 = 0",
    Family.h1unit: "h1 unit",
}


def _code_table(codes: list[SelfDualCode], title: str) -> Table:
    table = Table(
        box=box.ROUNDED,
        border_style="bright_blue",
        header_style="bold white",
        title=f"[bold]{title}[/bold]",
        title_style="bold cyan",
    )
    table.add_column("h1(x)", style="dim")
    table.add_column("Type", justify="center")
    table.add_column("The code C", style="white")
    table.add_column("Cell", style="dim")
    previous: Family | None = None
    for code in codes:
        if previous is not None and code.family is not previous:
            table.add_section()
        group = _FAMILY_TITLES[code.family] if code.family is not previous else ""
        table.add_row(group, f"Type {code.spec.type_tag}", format_code(code), code_label(code))
        previous = code.family
    return table


def _open_out(out: Path | None) -> TextIO:
    return out.open("w", encoding="utf-8") if out else sys.stdout


@app.command("enumerate")
def enumerate_cmd(
    ctx: typer.Context,
    s: Annotated[int, typer.Option("-s", help="Length exponent; codes have length 2^s")],
    m: Annotated[int, typer.Option("-m", help="Extension degree of F_{2^m}")] = 1,
    modulus: Annotated[
        str | None,
        typer.Option("--modulus", help="Irreducible modulus bits, constant term first"),
    ] = None,
    output_format: Annotated[
        OutputFormat, typer.Option("--format", "-f", help="Output format")
    ] = OutputFormat.table,
    out: Annotated[Path | None, typer.Option("--out", "-o", help="Write to file")] = None,
    workers: Annotated[
        int | None, typer.Option("--workers", help="Threads for h1-unit cells")
    ] = None,
    no_dedup: Annotated[
        bool, typer.Option("--no-dedup", help="Skip span deduplication")
    ] = False,
) -> None:
    """Enumerate every self-dual cyclic code of length 2^s."""
    state = _state(ctx)
    settings = state.config.enumeration
    _check_sm(s, m)
    with _exit_codes():
        field = _field(state, m, modulus)
        codes, report = enumerate_all(
            s,
            m,
            ctx=field,
            dedup=settings.dedup and not no_dedup,
            workers=workers if workers is not None else settings.workers,
            max_codes=settings.max_codes,
        )

    if output_format is OutputFormat.table:
        stream = _open_out(out)
        try:
            target = Console(file=stream) if out else console
            target.print(_code_table(codes, f"Self-dual cyclic codes, s={s}, m={m}"))
            _print_report(report, target)
        finally:
            if out:
                stream.close()
        return

    stream = _open_out(out)
    try:
        documents = [document_from_code(code) for code in codes]
        if output_format is OutputFormat.json:
            for document in documents:
                stream.write(document.to_json() + "\n")
        else:
            write_csv(documents, stream)
        stream.flush()
    finally:
        if out:
            stream.close()
    _print_report(report, err_console)


@app.command()
def verify(
    input_path: Annotated[
        Path | None, typer.Option("--input", "-i", help="JSON-lines file (default: stdin)")
    ] = None,
) -> None:
    """Check that every code in a JSON-lines stream is self-dual."""
    try:
        if input_path:
            with input_path.open(encoding="utf-8") as f:
                documents = read_documents(f)
        else:
            documents = read_documents(sys.stdin)
    except OSError as e:
        _fail(f"cannot read input: {e}", EXIT_USAGE)
    except DocumentError as e:
        _fail(str(e), EXIT_USAGE)
    if not documents:
        _fail("no code documents in input", EXIT_USAGE)

    failures = 0
    for index, document in enumerate(documents, start=1):
        with _exit_codes():
            field, gens = generators_from_document(document, record=index)
            report = verify_generators(field, document.s, gens, code_id=f"record {index}")
        if not (report.self_dual and report.dual_consistent):
            failures += 1
        sys.stdout.write(json.dumps(report.to_dict(), ensure_ascii=False) + "\n")

    if failures:
        err_console.print(f"[red]{failures} of {len(documents)} codes failed[/red]")
        raise typer.Exit(EXIT_FAILED)
    err_console.print(f"[green]{len(documents)} codes verified[/green]")


@app.command()
def table1(
    strict: Annotated[
        bool, typer.Option("--strict", help="Fail when the printed table differs")
    ] = False,
) -> None:
    """Reproduce the s=3, m=1 classification and diff it against the printed table."""
    with _exit_codes():
        codes, report = enumerate_all(TABLE_S, TABLE_M)
        unverified = [code for code in codes if not is_self_dual(code.span())]
        diff = table1_diff(codes)

    console.print(_code_table(codes, "Self-dual cyclic codes of length 8 over F_2[u]/(u^3)"))
    console.print(
        f"enumerated:    {report.count_type4} + {report.count_N} + {report.count_Nprime} "
        f"= {report.total}"
    )
    printed = printed_split()
    console.print(f"printed table: {' + '.join(map(str, printed))} = {sum(printed)}")

    console.print()
    console.print("[bold]Differences from the printed table[/bold]")
    for row in diff.unmatched_rows:
        console.print(
            f"  [yellow]row not generated:[/yellow] {row.text} (printed type {row.type_tag})"
        )
    for code in diff.unmatched_codes:
        console.print(
            f"  [yellow]code not printed:[/yellow] {format_code(code)} ({code_label(code)})"
        )
    for row, code in diff.type_mismatches:
        console.print(
            f"  [yellow]type label:[/yellow] {row.text} printed as type {row.type_tag}, "
            f"classified as type {code.spec.type_tag}"
        )
    if diff.empty:
        console.print("  [dim]none[/dim]")

    if unverified:
        err_console.print(f"[red]{len(unverified)} codes failed the self-duality check[/red]")
    if unverified or (strict and not diff.empty):
        raise typer.Exit(EXIT_FAILED)


@app.command()
def count(
    s: Annotated[int, typer.Option("-s", help="Length exponent")],
    m: Annotated[int, typer.Option("-m", help="Extension degree")] = 1,
) -> None:
    """Print N, N' and the total number of self-dual codes."""
    _check_sm(s, m)
    with _exit_codes():
        n_zero = count_N(s, m)
        n_unit = count_Nprime(s, m).count_Nprime
    console.print(f"N  = {n_zero}")
    console.print(f"N' = {n_unit}")
    console.print(f"total = 1 + N + N' = {1 + n_zero + n_unit}")


@app.command()
def oracle(
    ctx: typer.Context,
    s: Annotated[int, typer.Option("-s", help="Length exponent")],
    m: Annotated[int, typer.Option("-m", help="Extension degree")] = 1,
    mode: Annotated[
        OracleMode, typer.Option("--mode", help="Exhaustive sweep or branch-aware sampling")
    ] = OracleMode.exhaustive,
    samples: Annotated[int, typer.Option("--samples", help="Samples in sample mode")] = 200,
) -> None:
    """Cross-check the closed forms against brute force."""
    state = _state(ctx)
    settings = state.config.oracle
    _check_sm(s, m)

    if mode is OracleMode.sample:
        with _exit_codes():
            field = _field(state, m, None)
            result = sample_specs(
                field, s, samples, np.random.default_rng(settings.seed), cap=settings.sample_cap
            )
            reports = [
                oracle_check(spec, code_id=f"sample {i}") for i, spec in enumerate(result.samples)
            ]
        bad = [r for r in reports if r.discrepancies]
        for r in bad:
            err_console.print(f"[red]{r.code_id}:[/red] {'; '.join(r.discrepancies)}")
        console.print(
            f"{len(reports)} samples, {len(result.covered)} branches covered, "
            f"{len(bad)} with discrepancies"
        )
        if result.missing:
            console.print(f"[yellow]missed branches:[/yellow] {', '.join(sorted(result.missing))}")
        if bad or result.missing:
            raise typer.Exit(EXIT_FAILED)
        return

    with _exit_codes():
        found = oracle_exhaustive(
            s, m, max_s=settings.max_s, max_m=settings.max_m, max_spans=settings.max_spans
        )
        codes, _ = enumerate_all(s, m)
        enumerated = {code.span() for code in codes}
    console.print(f"exhaustive sweep: {len(found)} self-dual ideals")
    console.print(f"enumeration:      {len(enumerated)} codes")
    if found != enumerated:
        console.print("[red]the two sets differ[/red]")
        raise typer.Exit(EXIT_FAILED)
    console.print("[green]sets agree[/green]")


@app.command("config")
def config_cmd(
    ctx: typer.Context,
    init: Annotated[bool, typer.Option("--init", help="Write the config template")] = False,
    force: Annotated[bool, typer.Option("--force", help="Overwrite an existing file")] = False,
    path: Annotated[Path | None, typer.Option("--path", help="Config file to write")] = None,
) -> None:
    """Show the effective configuration, or write the template."""
    if init:
        target = path or SdcodesConfig.get_config_path()
        if target.exists() and not force:
            _fail(f"{target} already exists (use --force to overwrite)", EXIT_USAGE)
        SdcodesConfig.bootstrap(target)
        console.print(f"[green]Created config:[/green] {target}")
        return
    state = _state(ctx)
    console.print(yaml.safe_dump(state.config.to_dict(), sort_keys=False), end="")


def main() -> None:
    """Entry point for the CLI."""
    app()


if __name__ == "__main__":
    main()
