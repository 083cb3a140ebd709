from collections.abc import Callable
from enum import Enum
from typing import Annotated, Any

from typer import Argument, BadParameter, Option, Typer

from catalan_toolkit.common import (
    OutputFormat,
    OutputRecord,
    RecordKind,
    ToolkitError,
    write_csv,
    write_json_lines,
)
from catalan_toolkit.core.combinatorics import catalan, catalan_triangle, central_binomial, fuss_catalan3, t_number
from catalan_toolkit.core.msum import Kernel, KernelName, MSumQuery, direct_sum, msum, q_kernel
from catalan_toolkit.core.paths import (
    SCHROEDER_STEPS,
    Boundary,
    PathProblem,
    Step,
    count_schroeder,
    enumerate_paths,
    schr_closed_form,
    schr_total,
)

app = Typer()


class ComputeObject(str, Enum):
    """The objects `ctk compute` knows how to evaluate."""

    TRIANGLE = "triangle"
    CATALAN = "catalan"
    FUSS3 = "fuss3"
    CENTRAL = "central"
    TNUM = "tnum"
    SSUM = "ssum"
    MSUM = "msum"
    SCHR = "schr"
    SCHR_CLOSED = "schr-closed"
    SCHR_TOTAL = "schr-total"
    PATHS = "paths"


SEQUENCES: dict[ComputeObject, Callable[[int], int]] = {
    ComputeObject.CATALAN: catalan,
    ComputeObject.FUSS3: fuss_catalan3,
    ComputeObject.CENTRAL: central_binomial,
}


@app.command()
def compute(
    obj: Annotated[ComputeObject, Argument(metavar="OBJECT", help="The object to compute.", show_default=False)],
    rows: Annotated[
        int | None,
        Option("--rows", help="The last row of the `triangle`, or the last index of a `catalan`, `fuss3` or `central` listing.", min=0),
    ] = None,
    n: Annotated[
        int | None,
        Option("--n", help="The index `n`. For `ssum` the sum is taken at index `2n`, for `msum` at index `n` itself.", min=0),
    ] = None,
    m: Annotated[int | None, Option("--m", help="The exponent `m` of a sum, or the target ordinate of a path.", min=0)] = None,
    j: Annotated[int | None, Option("--j", help="The index `j` of an M sum, `T(n, j)` or a number of east steps.")] = None,
    t: Annotated[int, Option("--t", help="The exponent level `t` of an M sum.", min=0)] = 0,
    a: Annotated[int, Option("--a", help="The parameter `a` of the `Q` kernel.", min=0)] = 0,
    l: Annotated[int, Option("--l", help="The slope `l` of the boundary line of a path.", min=1)] = 1,  # noqa: E741
    kernel: Annotated[KernelName, Option("--kernel", help="The kernel of `ssum` and `msum`.")] = KernelName.S,
    lift: Annotated[int, Option("--lift", help="Lift the kernel by this many levels.", min=0)] = 0,
    boundary: Annotated[
        Boundary, Option("--boundary", help="Which side of the boundary line the listed `paths` stay on."),
    ] = Boundary.ABOVE,
    steps: Annotated[str, Option("--steps", help="The steps the listed `paths` may use, like `EN` or `END`.")] = "END",
    cap: Annotated[int, Option("--cap", help="Refuse to list more `paths` than this.", min=1)] = 1000,
    output_format: Annotated[
        OutputFormat, Option("--format", help="The format of the records written to standard output."),
    ] = OutputFormat.JSON,
) -> None:
    """Compute :abacus: values of the Catalan triangle, its sums and the generalized Schröder path counts.

    The result is written to standard output as JSON lines or CSV, with every integer in plain decimal digits.\n
    \n
    Examples:\n
    - `ctk compute triangle --rows 6 --format csv`\n
    - `ctk compute ssum --n 2 --m 1`\n
    - `ctk compute msum --kernel Q --a 2 --n 4 --j 1 --t 1`\n
    - `ctk compute schr --n 1 --m 5 --j 1 --l 2`\n
    - `ctk compute paths --n 1 --m 2 --l 2`
    """
    try:
        if obj == ComputeObject.TRIANGLE:
            _write_triangle(_require("--rows", rows), output_format)
        elif obj in SEQUENCES and rows is not None:
            _write_sequence(obj, SEQUENCES[obj], rows, output_format)
        elif obj == ComputeObject.PATHS:
            problem = PathProblem(
                _require("--n", n), _require("--m", m), _parse_steps(steps), boundary, l, east_steps=j,
            )
            _write_paths(problem, enumerate_paths(problem, cap), output_format)
        else:
            params, value = _evaluate(obj, n=n, m=m, j=j, t=t, a=a, l=l, kernel=kernel, lift=lift)
            _write_value(obj, params, value, output_format)
    except ToolkitError as e:
        msg = f"Cannot compute {obj.value}: {e}"
        raise BadParameter(msg) from e


def _require(name: str, value: int | None) -> int:
    if value is None:
        msg = "This option is required for the requested object."
        raise BadParameter(msg, param_hint=f"'{name}'")
    return value


def _parse_steps(steps: str) -> frozenset[Step]:
    try:
        parsed = frozenset(Step(letter) for letter in steps.upper())
    except ValueError as e:
        msg = f"Use the letters E, N and D only, got {steps!r}."
        raise BadParameter(msg, param_hint="'--steps'") from e
    return parsed or SCHROEDER_STEPS


def _build_kernel(name: KernelName, a: int, lift: int) -> Kernel:
    base = q_kernel(a) if name == KernelName.Q else Kernel(name)
    return base.lifted(lift)


def _evaluate(obj: ComputeObject, **options: Any) -> tuple[dict[str, Any], int]:  # noqa: ANN401
    """Evaluate a scalar object and return the parameters it was evaluated at together with its value."""
    n, m, j, l = options["n"], options["m"], options["j"], options["l"]  # noqa: E741
    match obj:
        case ComputeObject.CATALAN | ComputeObject.FUSS3 | ComputeObject.CENTRAL:
            n = _require("--n", n)
            return {"n": n}, SEQUENCES[obj](n)
        case ComputeObject.TNUM:
            n, j = _require("--n", n), _require("--j", j)
            return {"n": n, "j": j}, t_number(n, j)
        case ComputeObject.SSUM:
            n, m = _require("--n", n), _require("--m", m)
            if m < 1:
                msg = "The exponent of a sum must be at least 1."
                raise BadParameter(msg, param_hint="'--m'")
            kernel = _build_kernel(options["kernel"], options["a"], options["lift"])
            return {"kernel": str(kernel), "n": n, "m": m}, direct_sum(kernel, 2 * n, m)
        case ComputeObject.MSUM:
            kernel = _build_kernel(options["kernel"], options["a"], options["lift"])
            query = MSumQuery(kernel, _require("--n", n), _require("--j", j), options["t"])
            return {"kernel": str(kernel), "n": query.n, "j": query.j, "t": query.t}, msum(query)
        case ComputeObject.SCHR:
            n, m, j = _require("--n", n), _require("--m", m), _require("--j", j)
            return {"n": n, "m": m, "j": j, "l": l}, count_schroeder(n, m, j, l)
        case ComputeObject.SCHR_CLOSED:
            n, m, j = _require("--n", n), _require("--m", m), _require("--j", j)
            return {"n": n, "m": m, "j": j, "l": l}, schr_closed_form(n, m, j, l)
        case _:
            n, m = _require("--n", n), _require("--m", m)
            return {"n": n, "m": m, "l": l}, schr_total(n, m, l)


def _write_value(obj: ComputeObject, params: dict[str, Any], value: int, output_format: OutputFormat) -> None:
    if output_format == OutputFormat.CSV:
        write_csv(["object", *params, "value"], [[obj.value, *params.values(), value]])
        return
    write_json_lines([OutputRecord(RecordKind.SEQUENCE, {"object": obj.value, "params": params, "value": value})])


def _write_sequence(obj: ComputeObject, term: Callable[[int], int], last: int, output_format: OutputFormat) -> None:
    values = [term(i) for i in range(last + 1)]
    if output_format == OutputFormat.CSV:
        write_csv(["n", "value"], enumerate(values))
        return
    write_json_lines([OutputRecord(RecordKind.SEQUENCE, {"object": obj.value, "params": {"rows": last}, "values": values})])


def _write_triangle(last_row: int, output_format: OutputFormat) -> None:
    triangle = catalan_triangle(last_row)
    if output_format == OutputFormat.CSV:
        write_csv([f"k{k}" for k in range(last_row + 1)], triangle.rows)
        return
    write_json_lines(
        [OutputRecord(RecordKind.TABLE, {"object": "triangle", "params": {"rows": last_row}, "rows": triangle.rows})],
    )


def _write_paths(problem: PathProblem, paths: list[str], output_format: OutputFormat) -> None:
    if output_format == OutputFormat.CSV:
        write_csv(["path"], ([path] for path in paths))
        return
    params: dict[str, Any] = {
        "x": problem.x,
        "y": problem.y,
        "steps": "".join(sorted(s.value for s in problem.steps)),
        "boundary": problem.boundary.value,
        "l": problem.slope,
    }
    if problem.east_steps is not None:
        params["j"] = problem.east_steps
    write_json_lines(
        [OutputRecord(RecordKind.TABLE, {"object": "paths", "params": params, "count": len(paths), "paths": paths})],
    )
