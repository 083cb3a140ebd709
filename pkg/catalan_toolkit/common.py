import csv
import io
import json
from collections.abc import Collection, Iterable, Mapping, Sequence
from dataclasses import dataclass
from enum import Enum
from os import environ
from pathlib import Path
from typing import Any

from rich.console import Console
from rich.panel import Panel
from rich.progress import BarColumn, Progress, SpinnerColumn, TaskProgressColumn, TextColumn, TimeElapsedColumn
from typer import echo

DATA_DIR = Path(environ.get("CATALAN_TOOLKIT_DATA_DIR") or Path(__file__).parent / "data")
DEFAULT_WORKERS = int(environ.get("CATALAN_TOOLKIT_WORKERS", "1"))
PASCAL_ROWS = int(environ.get("CATALAN_TOOLKIT_PASCAL_ROWS", "640"))

# The console object to print all messages on stderr by default
console = Console(stderr=True, highlight=False)
# Override the native print method to use the custom console
print = console.print  # noqa: A001


class ExitCode(int, Enum):
    """The exit codes every command sticks to."""

    SUCCESS = 0
    MISMATCH = 1
    USAGE = 2


class OutputFormat(str, Enum):
    """The machine-readable formats written to standard output."""

    JSON = "json"
    CSV = "csv"


class ToolkitError(Exception):
    """Base class for errors raised by the toolkit's library code."""


class DomainError(ToolkitError, ValueError):
    """Raised when an operation is called outside of its documented domain."""


class IntegralityError(ToolkitError, ArithmeticError):
    """Raised when a division that must be exact leaves a remainder."""

    def __init__(self, what: str, numerator: int, denominator: int) -> None:
        """Initialize the error with the quantity being computed and the offending division.

        :param what: A short description of the quantity.
        :param numerator: The numerator of the failed division.
        :param denominator: The denominator of the failed division.
        """
        self.what = what
        self.numerator = numerator
        self.denominator = denominator
        super().__init__(f"{what}: {numerator} is not divisible by {denominator}")


class EnumerationCapError(ToolkitError):
    """Raised when a path listing would exceed the requested cap."""

    def __init__(self, count: int, cap: int) -> None:
        """Initialize the error with the actual count and the cap.

        :param count: The number of paths that would be listed.
        :param cap: The maximum number of paths allowed.
        """
        self.count = count
        self.cap = cap
        super().__init__(f"Refusing to list {count} paths, the cap is {cap}")


class SnapshotError(ToolkitError):
    """Raised when a sequence snapshot file is missing or malformed."""

    def __init__(self, path: Path, reason: str) -> None:
        """Initialize the error with the snapshot path and what went wrong.

        :param path: The path of the snapshot file.
        :param reason: What went wrong.
        """
        self.path = path
        super().__init__(f"{path}: {reason}")


class TransientProgress(Progress):
    """Render auto-updating transient progress bars using opinionated styling."""

    def __init__(self, disable: bool = False) -> None:
        """Initialize the :class:`rich.progress.Progress` instance with a specific styling.

        :param disable: Whether to hide the progress bars altogether, defaults to `False`.
        """
        super().__init__(
            SpinnerColumn(),
            TextColumn("[progress.description]{task.description}"),
            BarColumn(),
            TaskProgressColumn(),
            TimeElapsedColumn(),
            console=console,
            transient=True,
            disable=disable,
        )


def print_command_title(title: str) -> None:
    """Print a styled command title to the console using a fitted box and bold magenta text and box borders.

    :param title: The title to render
    """
    print(Panel.fit(title, style="bold magenta", border_style="bold magenta"), "")


def print_error(error_msg: str, details: str | None = None) -> None:
    """Print a styled error message with optional details.

    :param error_msg: The error message to render
    :param details: Extra details to render in a panel, defaults to None
    """
    print(f":exclamation_mark: {error_msg}", style="red")
    if details:
        print("", Panel(details, title="Details", title_align="left", style="red", border_style="bold red"))


def print_warning(warning_msg: str) -> None:
    """Print a styled warning message.

    :param warning_msg: The warning to render
    """
    print(f":warning: {warning_msg}", style="yellow")


def print_success(success_msg: str) -> None:
    """Print a styled success message.

    :param success_msg: The success message to render
    """
    print(f":white_check_mark: {success_msg}", style="green")


def normalize_list_option(option_list: Collection[str]) -> list[str]:
    """Normalize input by splitting comma-separated strings into a list."""
    if len(option_list) > 0 and any("," in options for options in option_list):
        return [option.strip() for options in option_list for option in options.split(",")]
    return list(option_list)


class RecordKind(str, Enum):
    """The kinds of records written to standard output."""

    TABLE = "table"
    SEQUENCE = "sequence"
    REPORT = "report"


@dataclass(frozen=True)
class OutputRecord:
    """A machine-readable output record. Every integer in the payload is written as a decimal string."""

    kind: RecordKind
    payload: Mapping[str, Any]

    def to_json(self) -> str:
        """Encode the record as a single JSON line."""
        return json.dumps({"kind": self.kind.value, **stringify(self.payload)}, separators=(",", ":"))

    @classmethod
    def from_json(cls, line: str) -> "OutputRecord":
        """Decode a record from a JSON line."""
        data = json.loads(line)
        kind = RecordKind(data.pop("kind"))
        return cls(kind, data)


def stringify(value: Any) -> Any:  # noqa: ANN401
    """Recursively replace every integer in a value by its decimal string."""
    if isinstance(value, bool):
        return str(value).lower()
    if isinstance(value, int):
        return str(value)
    if isinstance(value, Mapping):
        return {str(k): stringify(v) for k, v in value.items()}
    if isinstance(value, list | tuple):
        return [stringify(v) for v in value]
    return value


def write_json_lines(records: Iterable[OutputRecord]) -> None:
    """Write records to standard output, one JSON object per line."""
    for record in records:
        echo(record.to_json())


def write_csv(header: Sequence[str], rows: Iterable[Sequence[Any]]) -> None:
    """Write a header and rows to standard output as CSV, integers as plain decimal digits."""
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(header)
    writer.writerows([stringify(cell) for cell in row] for row in rows)
    echo(buffer.getvalue(), nl=False)
