"""Command-line frontend.

One subcommand per capability: triangle rows, path sums, the lambda
sequences, identity verification sweeps, polynomial derivation,
sequence export, and b-file cross-checks.  Exit codes: 0 success,
1 verification or cross-check failure, 2 usage errors.
"""

from __future__ import annotations

import sys
from collections.abc import Sequence
from concurrent.futures import ThreadPoolExecutor

import click

from . import identities, oeis
from .gfib import lambda_rec
from .paths import InvalidPathSpec, PathSpec, sum_S, sum_Sbar, sum_T, trace
from .polyderive import derive_QR
from .triangle import TriangleStore

_FAMILY_SUM = {"S": sum_S, "Sbar": sum_Sbar, "T": sum_T}


@click.group()
def main() -> None:
    """Exact arithmetic on iterated partial-sum triangles."""


@main.command("triangle")
@click.option("--order", type=int, required=True, help="triangle order, >= 1")
@click.option("--rows", type=int, required=True, help="last row index to print")
@click.option("--tsv", is_flag=True, help="tab-separated row dump: n=<row>, entries")
def triangle_cmd(order: int, rows: int, tsv: bool) -> None:
    """Print rows 0..ROWS of the order-ORDER triangle."""
    if order < 1 or rows < 0:
        raise click.UsageError("need --order >= 1 and --rows >= 0")
    store = TriangleStore()
    for n in range(rows + 1):
        row = store.row(order, n)
        if tsv:
            click.echo(f"n={n}\t" + "\t".join(str(v) for v in row))
        else:
            click.echo(f"n={n}: " + " ".join(str(v) for v in row))


@main.command("pathsum")
@click.option("--order", type=int, required=True, help="triangle order, >= 1")
@click.option(
    "--family", type=click.Choice(["S", "Sbar", "T"]), required=True
)
@click.option("--c", type=int, required=True, help="column drop per step")
@click.option("--l", type=int, required=True, help="row step")
@click.option("--n", type=int, required=True, help="path-sum index")
@click.option("--trace", "show_trace", is_flag=True, help="list visited cells")
def pathsum_cmd(
    order: int, family: str, c: int, l: int, n: int, show_trace: bool
) -> None:
    """Print one path sum, optionally with the cells it visits."""
    store = TriangleStore()
    try:
        spec = PathSpec(order, c, l, family, n)
        if show_trace:
            walk = trace(spec, store)
            for k, ((row, col), value) in enumerate(zip(walk.cells, walk.values)):
                click.echo(f"{k}\t{row}\t{col}\t{value}")
        total = _FAMILY_SUM[family](order, c, l, n, store)
    except InvalidPathSpec as exc:
        raise click.UsageError(str(exc)) from exc
    click.echo(str(total))


@main.command("lambda")
@click.option("--c", type=int, required=True, help="column drop, >= 2")
@click.option("--terms", type=int, required=True, help="number of terms")
def lambda_cmd(c: int, terms: int) -> None:
    """Print the generalized Fibonacci values lambda_1(c)..lambda_TERMS(c)."""
    if terms < 1:
        raise click.UsageError("need --terms >= 1")
    try:
        values = [lambda_rec(c, n) for n in range(1, terms + 1)]
    except ValueError as exc:
        raise click.UsageError(str(exc)) from exc
    for value in values:
        click.echo(str(value))


@main.command("verify")
@click.option("--identity", "name", type=str, default=None, help="one identity")
@click.option("--all", "run_all", is_flag=True, help="every registered identity")
@click.option("--n-max", type=int, required=True, help="sweep upper bound")
@click.option("--jobs", type=int, default=1, help="parallel sweeps")
@click.pass_context
def verify_cmd(
    ctx: click.Context, name: str | None, run_all: bool, n_max: int, jobs: int
) -> None:
    """Sweep identities against their brute-force oracles."""
    if run_all == (name is not None):
        raise click.UsageError("pass exactly one of --identity NAME or --all")
    if jobs < 1:
        raise click.UsageError("need --jobs >= 1")
    names = sorted(identities.REGISTRY) if run_all else [name]
    try:
        if jobs == 1:
            reports = [identities.verify(nm, n_max) for nm in names]
        else:
            with ThreadPoolExecutor(max_workers=jobs) as pool:
                reports = list(
                    pool.map(lambda nm: identities.verify(nm, n_max), names)
                )
    except (KeyError, ValueError) as exc:
        raise click.UsageError(str(exc.args[0])) from exc
    reports.sort(key=lambda r: r.name)
    for report in reports:
        click.echo(report.summary())
    if any(not r.ok for r in reports):
        ctx.exit(1)


@main.command("derive-poly")
@click.option("--order", type=int, required=True, help="triangle order, >= 1")
def derive_poly_cmd(order: int) -> None:
    """Print the polynomial pair of the order-ORDER T-path closed form."""
    if order < 1:
        raise click.UsageError("need --order >= 1")
    pair = derive_QR(order)
    click.echo(f"Q = {pair.Q}")
    click.echo(f"R = {pair.R}")


@main.command("sequence")
@click.option("--id", "oeis_id", type=str, required=True, help="OEIS id, AXXXXXX")
@click.option("--terms", "count", type=int, required=True, help="number of terms")
@click.option(
    "--bfile",
    type=click.Path(dir_okay=False, writable=True),
    default=None,
    help="write b-file here instead of printing",
)
def sequence_cmd(oeis_id: str, count: int, bfile: str | None) -> None:
    """Print or export terms of a bound sequence."""
    try:
        if bfile is None:
            for value in oeis.terms(oeis_id, count):
                click.echo(str(value))
        else:
            oeis.export_bfile(oeis_id, count, bfile)
    except (KeyError, ValueError) as exc:
        raise click.UsageError(str(exc.args[0])) from exc


@main.command("oeis-check")
@click.option("--id", "oeis_id", type=str, default=None, help="one OEIS id")
@click.option("--all", "run_all", is_flag=True, help="every binding")
@click.option("--terms", "count", type=int, required=True, help="terms to check")
@click.option(
    "--online",
    is_flag=True,
    help="fetch live b-files (cached) instead of bundled snapshots",
)
@click.pass_context
def oeis_check_cmd(
    ctx: click.Context,
    oeis_id: str | None,
    run_all: bool,
    count: int,
    online: bool,
) -> None:
    """Cross-check bound sequences against b-files."""
    if run_all == (oeis_id is not None):
        raise click.UsageError("pass exactly one of --id AXXXXXX or --all")
    ids = sorted(oeis.BINDINGS) if run_all else [oeis_id]
    store = TriangleStore()
    reports = []
    for seq in ids:
        try:
            reports.append(
                oeis.crosscheck(seq, count, store=store, online=online)
            )
        except KeyError as exc:
            raise click.UsageError(str(exc.args[0])) from exc
        except (ValueError, OSError) as exc:
            raise click.ClickException(str(exc)) from exc
    for report in reports:
        click.echo(report.summary())
    if any(not r.ok for r in reports):
        ctx.exit(1)


def run(argv: Sequence[str] | None = None) -> int:
    """Invoke the CLI programmatically and return its exit status."""
    try:
        main(
            args=list(argv) if argv is not None else None,
            prog_name="btriangles",
            standalone_mode=True,
        )
    except SystemExit as exc:
        code = exc.code
        if code is None:
            return 0
        return code if isinstance(code, int) else 1
    return 0


if __name__ == "__main__":
    sys.exit(run())
