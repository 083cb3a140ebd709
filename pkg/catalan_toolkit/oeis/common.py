from collections.abc import Callable
from dataclasses import dataclass
from enum import Enum
from pathlib import Path

from catalan_toolkit.common import DATA_DIR, SnapshotError
from catalan_toolkit.core.combinatorics import catalan, central_binomial, fuss_catalan3


class OeisSequence(str, Enum):
    """The sequences bundled as b-file snapshots."""

    CATALAN = "A000108"
    FUSS_CATALAN3 = "A001764"
    CENTRAL_BINOMIAL = "A000984"

    @property
    def generator(self) -> Callable[[int], int]:
        return _GENERATORS[self]


_GENERATORS: dict[OeisSequence, Callable[[int], int]] = {
    OeisSequence.CATALAN: catalan,
    OeisSequence.FUSS_CATALAN3: fuss_catalan3,
    OeisSequence.CENTRAL_BINOMIAL: central_binomial,
}


@dataclass(frozen=True)
class SequenceSnapshot:
    """An OEIS sequence as `(index, value)` pairs with strictly increasing indices."""

    oeis_id: str
    entries: tuple[tuple[int, int], ...]

    @property
    def last_index(self) -> int | None:
        return self.entries[-1][0] if self.entries else None


@dataclass(frozen=True)
class SequenceMismatch:
    """An index where the computed value differs from the snapshot."""

    index: int
    expected: int
    actual: int


@dataclass(frozen=True)
class SnapshotComparison:
    """The outcome of comparing computed values with a snapshot."""

    oeis_id: str
    compared: int
    requested_n_max: int
    snapshot_last_index: int | None
    mismatches: tuple[SequenceMismatch, ...]

    @property
    def truncated(self) -> bool:
        """Whether the snapshot ended before the requested last index."""
        return self.snapshot_last_index is None or self.snapshot_last_index < self.requested_n_max

    @property
    def matches(self) -> bool:
        return not self.mismatches


def parse_bfile(text: str, oeis_id: str, path: Path | None = None) -> SequenceSnapshot:
    """Parse the contents of an OEIS b-file.

    Blank lines and lines starting with `#` are skipped, every other line holds an index and a value separated by
    whitespace.

    :param text: The file contents.
    :param oeis_id: The identifier of the sequence, like `A000108`.
    :param path: The file the text came from, used in error messages, defaults to None.
    :raises SnapshotError: If a line is malformed or the indices do not increase.
    :return: The parsed snapshot.
    """
    source = path or Path(f"{oeis_id}.bfile")
    entries: list[tuple[int, int]] = []
    for line_number, raw_line in enumerate(text.splitlines(), start=1):
        line = raw_line.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if len(parts) != 2:
            raise SnapshotError(source, f"line {line_number} does not hold an index and a value")
        try:
            index, value = int(parts[0]), int(parts[1])
        except ValueError as e:
            raise SnapshotError(source, f"line {line_number} holds a non-integer") from e
        if entries and index <= entries[-1][0]:
            raise SnapshotError(source, f"line {line_number} does not increase the index")
        entries.append((index, value))
    return SequenceSnapshot(oeis_id, tuple(entries))


def load_snapshot(sequence: OeisSequence, data_dir: Path = DATA_DIR) -> SequenceSnapshot:
    """Load the bundled snapshot of a sequence.

    :param sequence: The sequence to load.
    :param data_dir: The directory holding the `.bfile` snapshots, defaults to the bundled data.
    :raises SnapshotError: If the file is missing, unreadable or malformed.
    :return: The parsed snapshot.
    """
    path = data_dir / f"{sequence.value}.bfile"
    try:
        text = path.read_text(encoding="utf-8")
    except OSError as e:
        raise SnapshotError(path, "snapshot file could not be read") from e
    except UnicodeDecodeError as e:
        raise SnapshotError(path, "snapshot file is not valid UTF-8") from e
    return parse_bfile(text, sequence.value, path)


def compare_with_snapshot(sequence: OeisSequence, snapshot: SequenceSnapshot, n_max: int) -> SnapshotComparison:
    """Compare the computed sequence with a snapshot on every snapshot index up to `n_max`."""
    compared = 0
    mismatches: list[SequenceMismatch] = []
    for index, expected in snapshot.entries:
        if index > n_max:
            break
        compared += 1
        actual = sequence.generator(index)
        if actual != expected:
            mismatches.append(SequenceMismatch(index, expected, actual))
    return SnapshotComparison(sequence.value, compared, n_max, snapshot.last_index, tuple(mismatches))
