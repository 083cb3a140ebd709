import math
import threading
from dataclasses import dataclass

from catalan_toolkit.common import PASCAL_ROWS, DomainError, IntegralityError


def exact_div(numerator: int, denominator: int, what: str) -> int:
    """Divide two integers, asserting that the division leaves no remainder.

    :param numerator: The dividend.
    :param denominator: The divisor, must not be zero.
    :param what: A short description of the quantity, used in the error message.
    :raises IntegralityError: If the division is not exact.
    :return: The exact quotient.
    """
    quotient, remainder = divmod(numerator, denominator)
    if remainder:
        raise IntegralityError(what, numerator, denominator)
    return quotient


class PascalTable:
    """An append-only cache of Pascal triangle rows, safe to share between threads.

    Rows are only ever appended, and a row is never mutated after it has been published, so readers never observe a
    partially built row.
    """

    def __init__(self, max_rows: int) -> None:
        """Initialize an empty table.

        :param max_rows: The number of rows the table is allowed to grow to.
        """
        self.max_rows = max_rows
        self._rows: list[tuple[int, ...]] = [(1,)]
        self._lock = threading.Lock()

    def __contains__(self, n: int) -> bool:
        return 0 <= n < self.max_rows

    def row(self, n: int) -> tuple[int, ...]:
        """Get row `n` of Pascal's triangle, growing the table if needed.

        :param n: The row index, `0 <= n < max_rows`.
        :return: The binomial coefficients `binom(n, 0..n)`.
        """
        rows = self._rows
        if n < len(rows):
            return rows[n]
        with self._lock:
            while len(self._rows) <= n:
                previous = self._rows[-1]
                self._rows.append((1, *(a + b for a, b in zip(previous, previous[1:])), 1))
            return self._rows[n]


_PASCAL = PascalTable(PASCAL_ROWS)


def binomial_multiplicative(n: int, k: int) -> int:
    """Compute a binomial coefficient with the multiplicative formula, using the zero-extension convention."""
    if n < 0 or k < 0 or k > n:
        return 0
    return math.comb(n, k)


def binomial(n: int, k: int) -> int:
    """Compute the binomial coefficient `binom(n, k)`.

    Any `k < 0`, `k > n` or `n < 0` yields 0. Rows of the cached Pascal table serve dense sweeps, and isolated queries
    beyond the table fall back to the multiplicative formula.

    :param n: The upper index.
    :param k: The lower index.
    :return: The binomial coefficient.
    """
    if n < 0 or k < 0 or k > n:
        return 0
    if n in _PASCAL:
        return _PASCAL.row(n)[k]
    return math.comb(n, k)


def catalan(n: int) -> int:
    """Compute the Catalan number `C_n = binom(2n, n) / (n + 1)`."""
    _require_non_negative(n=n)
    return exact_div(binomial(2 * n, n), n + 1, f"catalan({n})")


def fuss_catalan3(n: int) -> int:
    """Compute the Fuss-Catalan number of order three `binom(3n, n) / (2n + 1)`."""
    _require_non_negative(n=n)
    return exact_div(binomial(3 * n, n), 2 * n + 1, f"fuss_catalan3({n})")


def central_binomial(n: int) -> int:
    """Compute the central binomial coefficient `binom(2n, n)`."""
    _require_non_negative(n=n)
    return binomial(2 * n, n)


def catalan_triangle_entry(n: int, k: int) -> int:
    """Compute the Catalan triangle entry `C(n, k) = (n - k + 1) / (n + 1) * binom(n + k, n)`.

    :param n: The row, `n >= 0`.
    :param k: The column, `0 <= k <= n`.
    :raises DomainError: If `k` is outside `[0, n]`.
    :return: The number of lattice paths to `(n, k)` that never rise above `y = x`.
    """
    _require_non_negative(n=n, k=k)
    if k > n:
        msg = f"catalan_triangle_entry needs k <= n, got n={n}, k={k}"
        raise DomainError(msg)
    return exact_div((n - k + 1) * binomial(n + k, n), n + 1, f"C({n},{k})")


@dataclass(frozen=True)
class CatalanTriangle:
    """Rows `0..n_max` of the Catalan triangle, row `n` holding `C(n, 0..n)`."""

    rows: tuple[tuple[int, ...], ...]

    @property
    def n_max(self) -> int:
        return len(self.rows) - 1

    def __getitem__(self, n: int) -> tuple[int, ...]:
        return self.rows[n]


def catalan_triangle(n_max: int) -> CatalanTriangle:
    """Build the Catalan triangle row by row from its two recurrences.

    Each row starts with 1, every inner entry is `C(n+1, k) = C(n+1, k-1) + C(n, k)` and the last entry repeats its
    left neighbour, `C(n+1, n+1) = C(n+1, n)`. The closed form is not used, so the result can be checked against it.

    :param n_max: The last row to build.
    :return: The triangle rows `0..n_max`.
    """
    _require_non_negative(n_max=n_max)
    rows: list[tuple[int, ...]] = [(1,)]
    for n in range(n_max):
        previous = rows[-1]
        row = [1]
        for k in range(1, n + 1):
            row.append(row[k - 1] + previous[k])
        row.append(row[n])
        rows.append(tuple(row))
    return CatalanTriangle(tuple(rows))


def t_number(n: int, j: int) -> int:
    """Compute `T(n, j) = binom(2n + j, j) * binom(2n + 1, n + j + 1) / (2n + 1)`.

    :param n: A non-negative integer.
    :param j: An integer with `0 <= j <= n`.
    :raises DomainError: If `j` is outside `[0, n]`.
    :return: The number of Schröder paths to `(n, 2n)` above `y = 2x` with exactly `j` east steps.
    """
    _require_t_domain(n, j)
    return exact_div(
        binomial(2 * n + j, j) * binomial(2 * n + 1, n + j + 1),
        2 * n + 1,
        f"T({n},{j})",
    )


def t_number_alt(n: int, j: int) -> int:
    """Compute `T(n, j)` through its second form `binom(n, j) * binom(2n + j, n - 1) / n`, valid for `n >= 1`."""
    _require_t_domain(n, j)
    if n == 0:
        msg = "the second form of T(n, j) needs n >= 1"
        raise DomainError(msg)
    return exact_div(binomial(n, j) * binomial(2 * n + j, n - 1), n, f"T'({n},{j})")


def _require_t_domain(n: int, j: int) -> None:
    _require_non_negative(n=n, j=j)
    if j > n:
        msg = f"T(n, j) needs j <= n, got n={n}, j={j}"
        raise DomainError(msg)


def _require_non_negative(**values: int) -> None:
    for name, value in values.items():
        if value < 0:
            msg = f"{name} must be non-negative, got {value}"
            raise DomainError(msg)
