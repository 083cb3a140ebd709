"""Lattice path counting by dynamic programming, and the closed forms for generalized Schröder paths.

Paths start at the origin and are built from east `E = (1, 0)`, north `N = (0, 1)` and diagonal `D = (1, 1)` steps.
The boundary constraint is checked at every visited lattice point, both endpoints included, and points on the
boundary line are allowed. For boundaries `y >= l * x` with `l >= 1` this is the same as checking the continuous path,
since no step rises faster than the line.
"""

from collections.abc import Iterator
from dataclasses import dataclass
from enum import Enum

from catalan_toolkit.common import DomainError, EnumerationCapError

from .combinatorics import binomial, exact_div


class Step(str, Enum):
    """A single lattice path step, named by the letter used in step strings."""

    D = "D"
    E = "E"
    N = "N"

    @property
    def delta(self) -> tuple[int, int]:
        return _STEP_DELTAS[self]


_STEP_DELTAS = {Step.D: (1, 1), Step.E: (1, 0), Step.N: (0, 1)}

CATALAN_STEPS = frozenset({Step.E, Step.N})
SCHROEDER_STEPS = frozenset({Step.E, Step.N, Step.D})


class Boundary(str, Enum):
    """The side of a line through the origin that paths have to stay on."""

    # l * y <= x, i.e. never above y = x / l
    BELOW = "never_above_y_eq_x_over_l"
    # y >= l * x, i.e. never below y = l * x
    ABOVE = "never_below_y_eq_lx"


@dataclass(frozen=True)
class PathProblem:
    """A family of lattice paths from the origin to `(x, y)`.

    :param x: The target abscissa.
    :param y: The target ordinate.
    :param steps: The allowed steps.
    :param boundary: Which side of the boundary line the paths stay on.
    :param slope: The positive integer `l` defining the boundary line.
    :param east_steps: The exact number of `E` steps, or `None` to count paths regardless of it.
    """

    x: int
    y: int
    steps: frozenset[Step] = SCHROEDER_STEPS
    boundary: Boundary = Boundary.ABOVE
    slope: int = 1
    east_steps: int | None = None

    def __post_init__(self) -> None:
        if self.slope < 1:
            msg = f"the boundary slope must be a positive integer, got l={self.slope}"
            raise DomainError(msg)

    def allows(self, x: int, y: int) -> bool:
        """Check whether the lattice point `(x, y)` satisfies the boundary constraint."""
        if self.boundary == Boundary.BELOW:
            return self.slope * y <= x
        return y >= self.slope * x


def count_paths(problem: PathProblem) -> int:
    """Count the paths of a problem with a dynamic program over `(x, y, east steps used)`.

    Every count is the sum of the counts at the points one `E`, `D` or `N` step before it, and is zero at points
    violating the boundary. The east-step dimension is dropped when no statistic is requested.

    :param problem: The path family to count.
    :return: The number of paths.
    """
    target_x, target_y, east = problem.x, problem.y, problem.east_steps
    if target_x < 0 or target_y < 0:
        return 0
    track = east is not None
    if track and not 0 <= east <= target_x:
        return 0
    depth = target_x + 1 if track else 1

    table = [[[0] * depth for _ in range(target_y + 1)] for _ in range(target_x + 1)]
    for x in range(target_x + 1):
        for y in range(target_y + 1):
            if not problem.allows(x, y):
                continue
            cell = table[x][y]
            if x == 0 and y == 0:
                cell[0] = 1
                continue
            for e in range(depth):
                count = 0
                if Step.E in problem.steps and x > 0:
                    if not track:
                        count += table[x - 1][y][e]
                    elif e > 0:
                        count += table[x - 1][y][e - 1]
                if Step.D in problem.steps and x > 0 and y > 0:
                    count += table[x - 1][y - 1][e]
                if Step.N in problem.steps and y > 0:
                    count += table[x][y - 1][e]
                cell[e] = count
    return table[target_x][target_y][east if track else 0]


def count_catalan_paths(n: int, k: int) -> int:
    """Count `{E, N}` paths to `(n, k)` that never rise above `y = x`."""
    return count_paths(PathProblem(n, k, CATALAN_STEPS, Boundary.BELOW, 1))


def count_fuss_paths(n: int) -> int:
    """Count `{E, N}` paths to `(2n, n)` that never rise above `y = x / 2`."""
    return count_paths(PathProblem(2 * n, n, CATALAN_STEPS, Boundary.BELOW, 2))


def count_schroeder(n: int, m: int, j: int, l: int) -> int:  # noqa: E741
    """Count `{E, N, D}` paths to `(n, m)` that never go below `y = l * x` and use exactly `j` east steps.

    Out-of-range arguments (`j < 0`, `j > n`, `m < l * n`) give 0.
    """
    return count_paths(PathProblem(n, m, SCHROEDER_STEPS, Boundary.ABOVE, l, east_steps=j))


def count_schroeder_total(n: int, m: int, l: int) -> int:  # noqa: E741
    """Count `{E, N, D}` paths to `(n, m)` that never go below `y = l * x`, whatever their number of east steps."""
    return count_paths(PathProblem(n, m, SCHROEDER_STEPS, Boundary.ABOVE, l))


def _require_schroeder_domain(n: int, m: int, l: int) -> None:  # noqa: E741
    if n < 1 or l < 1:
        msg = f"the Schröder closed forms need n >= 1 and l >= 1, got n={n}, l={l}"
        raise DomainError(msg)
    if m < l * n:
        msg = f"the Schröder closed forms are only claimed for m >= l*n, got n={n}, m={m}, l={l}"
        raise DomainError(msg)


def schr_closed_form(n: int, m: int, j: int, l: int) -> int:  # noqa: E741
    """Compute `Schr(n, m, j, l) = (m - l*n + 1) / n * binom(n, j) * binom(m + j, n - 1)`.

    :raises DomainError: If `n < 1` or `m < l * n`, where the formula is not claimed.
    """
    _require_schroeder_domain(n, m, l)
    return exact_div(
        (m - l * n + 1) * binomial(n, j) * binomial(m + j, n - 1),
        n,
        f"Schr({n},{m},{j},{l})",
    )


def schr_total(n: int, m: int, l: int) -> int:  # noqa: E741
    """Compute `Schr(n, m, l) = (m - l*n + 1) / n * sum_j binom(n, j) * binom(m + j, n - 1)`.

    :raises DomainError: If `n < 1` or `m < l * n`, where the formula is not claimed.
    """
    _require_schroeder_domain(n, m, l)
    total = sum(binomial(n, j) * binomial(m + j, n - 1) for j in range(n + 1))
    return exact_div((m - l * n + 1) * total, n, f"Schr({n},{m},{l})")


def enumerate_paths(problem: PathProblem, cap: int) -> list[str]:
    """List every path of a problem as a step string read from the origin, in lexicographic order.

    :param problem: The path family to list.
    :param cap: The maximum number of paths to list.
    :raises EnumerationCapError: If the family holds more than `cap` paths.
    :return: The sorted step strings.
    """
    count = count_paths(problem)
    if count > cap:
        raise EnumerationCapError(count, cap)
    if count == 0:
        return []
    return sorted(_walk(problem, 0, 0, 0, []))


def _walk(problem: PathProblem, x: int, y: int, east: int, prefix: list[str]) -> Iterator[str]:
    if x == problem.x and y == problem.y:
        if problem.east_steps is None or east == problem.east_steps:
            yield "".join(prefix)
        return
    for step in sorted(problem.steps):
        dx, dy = step.delta
        nx, ny, ne = x + dx, y + dy, east + (step == Step.E)
        if nx > problem.x or ny > problem.y or not problem.allows(nx, ny):
            continue
        if problem.east_steps is not None and ne > problem.east_steps:
            continue
        prefix.append(step.value)
        yield from _walk(problem, nx, ny, ne, prefix)
        prefix.pop()
