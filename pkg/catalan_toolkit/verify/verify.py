from typing import Annotated

from rich.table import Table
from typer import Argument, Exit, Option, Typer

from catalan_toolkit.common import (
    DEFAULT_WORKERS,
    ExitCode,
    OutputFormat,
    OutputRecord,
    RecordKind,
    TransientProgress,
    normalize_list_option,
    print,
    print_command_title,
    print_error,
    print_success,
    write_csv,
    write_json_lines,
)

from .claims import CLAIMS, ClaimId, Params, SweepConfig, VerificationReport, Verdict, run_all

app = Typer()


@app.command()
def verify(
    claims: Annotated[
        list[str] | None,
        Argument(help="Verify these claims, like `THM1 THM2` or `THM1,EQ7`, or `all`.", show_default=False),
    ] = None,
    n_max: Annotated[int | None, Option("--n-max", help="Replace the upper bound of every `n` range.", min=0)] = None,
    m_max: Annotated[int | None, Option("--m-max", help="Replace the upper bound of every `m` range.", min=1)] = None,
    t_max: Annotated[int | None, Option("--t-max", help="Replace the upper bound of every `t` range.", min=1)] = None,
    a_max: Annotated[int | None, Option("--a-max", help="Replace the upper bound of every `a` range.", min=0)] = None,
    slopes: Annotated[
        list[int] | None,
        Option("--l", help="Sweep the Schröder path claims over these boundary slopes.", min=1),
    ] = None,
    output_format: Annotated[
        OutputFormat, Option("--format", help="The format of the reports written to standard output."),
    ] = OutputFormat.JSON,
    workers: Annotated[
        int,
        Option("--workers", "-w", envvar="CATALAN_TOOLKIT_WORKERS", help="Sweep the claims in this many processes.", min=1),
    ] = DEFAULT_WORKERS,
    quiet: Annotated[bool, Option("--quiet", "-q", help="Only write the reports, no progress or summary.")] = False,
    seed_manifest: Annotated[
        bool, Option("--seed-manifest", help="Write the claim identifiers with their statements and exit."),
    ] = False,
) -> None:
    """Verify :mag: the claims about Catalan triangle sums on finite parameter ranges.

    Every claim is swept over its default range, unless overridden by the range options. One report is written per
    claim, listing every counterexample found. A passing report means the claim holds on the swept range.\n
    \n
    Exits with `0` when every claim passes, `1` when a counterexample was found and `2` on an unknown claim.
    """
    if seed_manifest:
        _write_manifest(output_format)
        return

    selected = _parse_claims(normalize_list_option(claims or ["all"]))
    config = SweepConfig().with_overrides(n_max=n_max, m_max=m_max, t_max=t_max, a_max=a_max, slopes=slopes)

    if not quiet:
        print_command_title(":mag: Claim Verification")

    with TransientProgress(disable=quiet) as progress:
        task = progress.add_task(f"Verifying {len(selected)} claims", total=len(selected))

        def advance(report: VerificationReport) -> None:
            progress.update(task, advance=1, description=f"Verified [b]{report.claim.value}[/b]")

        reports = run_all(config, selected, workers=workers, on_report=advance)

    _write_reports(reports, output_format)

    failed = [r for r in reports if r.verdict == Verdict.FAIL]
    if not quiet:
        print(_summary_table(reports), "")
        if failed:
            print_error(f"{len(failed)} of {len(reports)} claims have counterexamples on the swept ranges.")
        else:
            print_success(f"All {len(reports)} claims verified on the swept ranges.\n")
    if failed:
        raise Exit(ExitCode.MISMATCH)


def _parse_claims(requested: list[str]) -> list[ClaimId]:
    if any(c.lower() == "all" for c in requested):
        return list(CLAIMS)
    try:
        return [ClaimId(c.upper()) for c in requested]
    except ValueError as e:
        print_error(f"Unknown claim. Choose from {', '.join(c.value for c in ClaimId)} or `all`.", str(e))
        raise Exit(ExitCode.USAGE) from e


def _write_manifest(output_format: OutputFormat) -> None:
    if output_format == OutputFormat.CSV:
        write_csv(["claim", "statement"], [[claim.id.value, claim.statement] for claim in CLAIMS.values()])
        return
    write_json_lines(
        OutputRecord(RecordKind.TABLE, {"claim": claim.id.value, "statement": claim.statement})
        for claim in CLAIMS.values()
    )


def _write_reports(reports: list[VerificationReport], output_format: OutputFormat) -> None:
    if output_format == OutputFormat.CSV:
        # One row per counterexample, or a single row with empty counterexample cells for a passing claim.
        rows: list[list[object]] = []
        for r in reports:
            summary = [r.claim.value, r.verdict.value, r.instances, len(r.counterexamples), f"{r.elapsed:.3f}"]
            rows.extend(
                [*summary, _format_params(c.params), c.check, c.expected, c.actual] for c in r.counterexamples
            )
            if not r.counterexamples:
                rows.append([*summary, "", "", "", ""])
        write_csv(
            ["claim", "verdict", "instances", "counterexamples", "elapsed", "params", "check", "expected", "actual"],
            rows,
        )
        return
    write_json_lines(OutputRecord(RecordKind.REPORT, r.as_payload()) for r in reports)


def _format_params(params: Params) -> str:
    return ";".join(f"{name}={value}" for name, value in params.items())



def _summary_table(reports: list[VerificationReport]) -> Table:
    table = Table(box=None, pad_edge=False)
    table.add_column("Claim", style="bold")
    table.add_column("Verdict")
    table.add_column("Instances", justify="right")
    table.add_column("Counterexamples", justify="right")
    table.add_column("Elapsed", justify="right")
    for report in reports:
        verdict = (
            "[green]:white_check_mark: pass[/green]"
            if report.verdict == Verdict.PASS
            else "[red]:x: fail[/red]"
        )
        table.add_row(
            report.claim.value,
            verdict,
            str(report.instances),
            str(len(report.counterexamples)),
            f"{report.elapsed:.2f}s",
        )
    return table
