from pathlib import Path
from typing import Annotated

from typer import Argument, Exit, Option, Typer

from catalan_toolkit.common import (
    DATA_DIR,
    ExitCode,
    OutputFormat,
    OutputRecord,
    RecordKind,
    SnapshotError,
    normalize_list_option,
    print,
    print_command_title,
    print_error,
    print_success,
    print_warning,
    write_csv,
    write_json_lines,
)

from .common import OeisSequence, SnapshotComparison, compare_with_snapshot, load_snapshot

app = Typer()


@app.command(name="oeis-check")
def oeis_check(
    sequences: Annotated[
        list[str],
        Argument(help="Check these sequences: `A000108` (Catalan), `A001764` (Fuss-Catalan), `A000984` (central), or `all`."),
    ],
    n_max: Annotated[int, Option("--n-max", help="Compare the indices up to this one.", min=0)] = 100,
    output_format: Annotated[
        OutputFormat, Option("--format", help="The format of the records written to standard output."),
    ] = OutputFormat.JSON,
    data_dir: Annotated[
        Path,
        Option(
            "--data-dir",
            envvar="CATALAN_TOOLKIT_DATA_DIR",
            help="Read the `.bfile` snapshots from this directory instead of the bundled ones.",
        ),
    ] = DATA_DIR,
    quiet: Annotated[bool, Option("--quiet", "-q", help="Only write the records, no progress messages.")] = False,
) -> None:
    """Cross-check :1234: generated sequences against bundled OEIS b-file snapshots.

    The computed values are compared with the snapshot on every index up to `--n-max`. If the snapshot ends earlier,
    the available prefix is compared and the truncation is reported.\n
    \n
    Exits with `0` when everything agrees, `1` on a mismatch and `2` when a snapshot is missing or malformed.
    """
    if not quiet:
        print_command_title(":1234: OEIS Snapshot Check")

    requested = normalize_list_option(sequences)
    try:
        selected = list(OeisSequence) if "all" in requested else [OeisSequence(s) for s in requested]
    except ValueError as e:
        print_error(f"Unknown sequence. Choose from {', '.join(s.value for s in OeisSequence)} or `all`.", str(e))
        raise Exit(ExitCode.USAGE) from e

    comparisons: list[SnapshotComparison] = []
    for sequence in selected:
        try:
            snapshot = load_snapshot(sequence, data_dir)
        except SnapshotError as e:
            print_error(f"The snapshot for [b]{sequence.value}[/b] could not be loaded.", str(e))
            raise Exit(ExitCode.USAGE) from e
        comparison = compare_with_snapshot(sequence, snapshot, n_max)
        comparisons.append(comparison)
        if quiet:
            continue
        if comparison.truncated:
            print_warning(
                f"[b]{sequence.value}[/b]: the snapshot ends at index {comparison.snapshot_last_index}, "
                f"only the available prefix was compared.",
            )
        if comparison.matches:
            print_success(f"[b]{sequence.value}[/b]: {comparison.compared} values match.")
        else:
            print_error(f"[b]{sequence.value}[/b]: {len(comparison.mismatches)} of {comparison.compared} values differ.")

    _write_comparisons(comparisons, output_format)

    if not all(c.matches for c in comparisons):
        raise Exit(ExitCode.MISMATCH)
    if not quiet:
        print("")


def _write_comparisons(comparisons: list[SnapshotComparison], output_format: OutputFormat) -> None:
    if output_format == OutputFormat.CSV:
        # One row per mismatch, or a single row with empty mismatch cells for a matching sequence.
        rows: list[list[object]] = []
        for c in comparisons:
            summary = [c.oeis_id, c.compared, c.truncated]
            rows.extend([*summary, m.index, m.expected, m.actual] for m in c.mismatches)
            if c.matches:
                rows.append([*summary, "", "", ""])
        write_csv(["oeis_id", "compared", "truncated", "index", "expected", "actual"], rows)
        return
    write_json_lines(
        OutputRecord(
            RecordKind.SEQUENCE,
            {
                "oeis_id": c.oeis_id,
                "compared": c.compared,
                "truncated": c.truncated,
                "matches": c.matches,
                "mismatches": [{"index": m.index, "expected": m.expected, "actual": m.actual} for m in c.mismatches],
            },
        )
        for c in comparisons
    )
