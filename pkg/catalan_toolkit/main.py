from importlib.metadata import PackageNotFoundError
from importlib.metadata import version as package_version
from typing import Annotated

from typer import Exit, Option, Typer

from .common import print
from .compute import app as compute_app
from .oeis import app as oeis_app
from .verify import app as verify_app

# The main app to register all the commands with.
app = Typer(no_args_is_help=True, rich_markup_mode="markdown")
app.add_typer(compute_app)
app.add_typer(verify_app)
app.add_typer(oeis_app)


@app.callback(invoke_without_command=True)
def main(version: Annotated[bool, Option("--version", help="Show the version and exit.")] = False) -> None:
    """🔺 Catalan Toolkit

    Exact computation and finite-range verification of the divisibility and closed-form claims about sums of the
    Catalan triangle, and of generalized Schröder path counts.
    """  # noqa: D400, D415
    if version:
        try:
            print(package_version("catalan-toolkit"))
        except PackageNotFoundError:
            print("Version could not be detected")
        raise Exit
