from typing import TYPE_CHECKING, Any, Dict, Optional, Tuple, cast

import click

import wcqsym
from wcqsym import (
    DirectedWeakComposition,
    RenElement,
    StirlingIndex,
    WeakComposition,
    Z,
    phi,
    ren_antipode,
    ren_coproduct,
    renormalized_M,
    stirling_to_M,
)
from wcqsym.qsym import expand_tpoly
from wcqsym.regularization import default_window
from wcqsym.verify import run_suite, suite_names

from .output import OutputRecord, render_expansion
from .utils import COMPOSITION, WINDOW, format_results, print_error, print_info


@click.group()
@click.version_option(wcqsym.__version__)
def cli():
    pass


# this is somehow needed to make PyCharm happy with runner.invoke(cli, ...)
if TYPE_CHECKING:  # pragma: no cover
    cli = cast(click.Group, cli)


json_option = click.option(
    "--json", "as_json", is_flag=True, help="Emit the result as JSON instead of text."
)


def _emit(record: OutputRecord, as_json: bool) -> None:
    click.echo(record.to_json() if as_json else record.render())


def _directed(alpha: WeakComposition, beta: WeakComposition) -> DirectedWeakComposition:
    try:
        return DirectedWeakComposition(alpha, beta)
    except ValueError as err:
        raise click.BadParameter(str(err), param_hint="BETA")


@cli.command()
@click.argument("alpha", type=COMPOSITION)
@click.option(
    "--delta",
    "-d",
    type=click.IntRange(min=1),
    default=1,
    show_default=True,
    envvar="WCQSYM_DELTA",
    help="Common direction used to regularize.",
)
@click.option(
    "--check-delta",
    is_flag=True,
    help="Recompute with another direction and fail if the results differ.",
)
@click.option(
    "--expand",
    "-x",
    type=click.IntRange(min=0),
    metavar="N",
    help="Also print the power series restricted to the first N variables.",
)
@json_option
def renorm(
    alpha: WeakComposition,
    delta: int,
    check_delta: bool,
    expand: Optional[int],
    as_json: bool,
) -> None:
    """Compute the renormalized monomial quasisymmetric function of ALPHA.

    ALPHA is a comma-separated weak composition such as `0,2,0`; the empty string stands for
    the empty composition. The result is a polynomial in t over the monomial quasisymmetric
    functions of left weak compositions.

    The direction may also be set with the WCQSYM_DELTA environment variable.
    """
    try:
        value = renormalized_M(alpha, delta)
    except ArithmeticError as err:
        print_error("Renormalization failed: ", str(err))
        raise click.Abort()

    if check_delta:
        other = 1 if delta == 2 else 2
        if renormalized_M(alpha, other) != value:
            print_error(
                "Direction check failed: ",
                f"delta={delta} and delta={other} disagree for {tuple(alpha)}",
            )
            raise click.Abort()
        print_info("Direction check passed: ", f"delta={delta} and delta={other} agree")

    meta: Dict[str, Any] = {"command": "renorm", "alpha": list(alpha), "delta": delta}
    expansion = None
    if expand is not None:
        expansion = render_expansion(expand_tpoly(value, expand))
        meta["expand"] = expand
        meta["expansion"] = expansion

    _emit(OutputRecord.from_tpoly(value, meta), as_json)
    if expansion is not None and not as_json:
        click.echo(expansion)


@cli.command()
@click.argument("alpha", type=COMPOSITION)
@click.argument("beta", type=COMPOSITION)
@json_option
def product(alpha: WeakComposition, beta: WeakComposition, as_json: bool) -> None:
    """Multiply the renormalized functions of ALPHA and BETA."""
    result = RenElement.M(alpha) * RenElement.M(beta)
    meta = {"command": "product", "operands": [list(alpha), list(beta)]}
    _emit(OutputRecord.from_lincomb(result, meta), as_json)


@cli.command()
@click.argument("alpha", type=COMPOSITION)
@json_option
def coproduct(alpha: WeakComposition, as_json: bool) -> None:
    """Deconcatenation coproduct of the renormalized function of ALPHA."""
    result = ren_coproduct(RenElement.M(alpha))
    meta = {"command": "coproduct", "alpha": list(alpha)}
    _emit(OutputRecord.from_coproduct(result, meta), as_json)


@cli.command()
@click.argument("alpha", type=COMPOSITION)
@json_option
def antipode(alpha: WeakComposition, as_json: bool) -> None:
    """Antipode of the renormalized function of ALPHA."""
    result = ren_antipode(RenElement.M(alpha))
    meta = {"command": "antipode", "alpha": list(alpha)}
    _emit(OutputRecord.from_lincomb(result, meta), as_json)


@cli.command(name="phi")
@click.argument("alpha", type=COMPOSITION)
@click.argument("beta", type=COMPOSITION)
@click.option(
    "--window",
    "-w",
    type=WINDOW,
    metavar="LO:HI",
    help="Range of z-exponents to print (default: -k:k with k the length of ALPHA).",
)
@json_option
def phi_command(
    alpha: WeakComposition,
    beta: WeakComposition,
    window: Optional[Tuple[int, int]],
    as_json: bool,
) -> None:
    """Print the regularization of ALPHA in direction BETA as a Laurent series in z.

    ALPHA and BETA must have the same length and BETA must only have positive entries. Each
    non-zero coefficient is printed as `z^e: <coefficient>`.
    """
    d = _directed(alpha, beta)
    window = window if window is not None else default_window(d)
    try:
        series = phi(d, window).series
    except (ArithmeticError, ValueError) as err:
        print_error("Regularization failed: ", str(err))
        raise click.Abort()

    meta = {"command": "phi", "alpha": list(alpha), "beta": list(beta), "window": list(window)}
    _emit(OutputRecord.from_series(series, meta), as_json)


@cli.command()
@click.argument("alpha", type=COMPOSITION)
@click.argument("beta", type=COMPOSITION)
@json_option
def directional(alpha: WeakComposition, beta: WeakComposition, as_json: bool) -> None:
    """Directional value Z of ALPHA in direction BETA."""
    d = _directed(alpha, beta)
    try:
        value = Z(d)
    except ArithmeticError as err:
        print_error("Renormalization failed: ", str(err))
        raise click.Abort()

    meta = {"command": "directional", "alpha": list(alpha), "beta": list(beta)}
    _emit(OutputRecord.from_tpoly(value, meta), as_json)


@cli.command()
@click.argument("alpha", type=COMPOSITION)
@click.argument("beta", type=COMPOSITION)
@json_option
def stirling(alpha: WeakComposition, beta: WeakComposition, as_json: bool) -> None:
    """Expand the Stirling function of ALPHA over BETA in the monomial basis.

    ALPHA must be left weak (empty or ending with a positive entry); BETA is a weak
    composition of the same length.
    """
    try:
        index = StirlingIndex(alpha, beta)
    except ValueError as err:
        raise click.BadParameter(str(err), param_hint="ALPHA/BETA")

    meta = {"command": "stirling", "alpha": list(alpha), "beta": list(beta)}
    _emit(OutputRecord.from_lincomb(stirling_to_M(index), meta), as_json)


@cli.command()
@click.argument("suite", type=click.Choice(suite_names() + ["all"]))
@click.option(
    "--max-size",
    "-k",
    type=click.IntRange(min=1),
    default=3,
    show_default=True,
    envvar="WCQSYM_MAX_SIZE",
    help="Size bound of the exhaustive checks.",
)
@click.option(
    "--multiprocessing",
    "-m",
    is_flag=True,
    envvar="WCQSYM_MULTIPROCESSING",
    help="Enable multiprocessing.",
)
def verify(suite: str, max_size: int, multiprocessing: bool) -> None:
    """Run an invariant suite and print a pass/fail table.

    SUITE is one of the suite names, or `all` to run every suite. The exit code is 0 if every
    check passes. Otherwise the first counterexample is printed and the exit code is 1.

    Checks may run in parallel with --multiprocessing or the WCQSYM_MULTIPROCESSING
    environment variable.
    """
    names = suite_names() if suite == "all" else [suite]
    results = []
    for name in names:
        print_info("Running suite: ", name)
        results.append(run_suite(name, max_size, multiprocessing))

    click.echo(format_results(results))

    failed = [r for r in results if not r.passed]
    if failed:
        first = failed[0].first_failure
        assert first is not None
        print_error("Counterexample: ", f"[{failed[0].name}] {first.label}: {first.detail}")
        raise click.Abort()


if __name__ == "__main__":
    cli()
