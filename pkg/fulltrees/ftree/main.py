import logging
import sys

import click

import fulltrees
from fulltrees import (
    ALGORITHM_PARAMS,
    DEFAULT_ALGORITHM,
    FullTreesError,
    MalformedInput,
    Overflow,
    cross_check,
    format_csv,
    height,
    is_full,
    measure_scaling,
    node_count,
    parse_input,
    render_tree,
)
from fulltrees._conf import BENCH_SIZES, BENCH_TRIALS, INPUT_FORMATS, RENDER_FORMATS


class LibraryFailure(click.ClickException):
    """A balancer broke one of its guarantees."""

    exit_code = 2


@click.version_option(version=fulltrees.__version__, message="%(version)s")
@click.group()
@click.option(
    "--debug",
    is_flag=True,
    help="Print debug log messages to stderr.",
)
@click.pass_context
def ftree(ctx, **kwargs):
    ctx.obj = dict(**kwargs)
    if ctx.obj["debug"]:
        logging.basicConfig(level=logging.DEBUG)


@ftree.command(short_help="Balance labels into a full tree.")
@click.argument("INPUT", type=click.File("rb"), default="-")
@click.option(
    "--algo",
    "-a",
    type=click.Choice(list(ALGORITHM_PARAMS)),
    default=DEFAULT_ALGORITHM,
    help="Balancing tier. (default: %s)" % DEFAULT_ALGORITHM,
)
@click.option(
    "--format",
    "-f",
    "output_format",
    type=click.Choice(RENDER_FORMATS),
    default="sexpr",
    help="Tree rendering. (default: sexpr)",
)
@click.option(
    "--input",
    "-i",
    "input_format",
    type=click.Choice(INPUT_FORMATS),
    default="lines",
    help="Label list layout. (default: lines)",
)
@click.option("--stats", is_flag=True, help="Print size, height and fullness.")
@click.option("--check", is_flag=True, help="Cross check every tier on the input.")
def balance(input, algo, output_format, input_format, stats, check):
    """Balance the labels in INPUT (default: stdin) and print the tree."""
    try:
        labels = parse_input(input.read(), input_format)
    except MalformedInput as e:
        raise click.ClickException("malformed input: %s" % e)
    try:
        witness = fulltrees.balance(labels, algo)
    except Overflow as e:
        raise click.ClickException(str(e))
    except FullTreesError as e:
        raise LibraryFailure("%s: %s" % (type(e).__name__, e))
    tree = witness.tree
    click.echo(render_tree(tree, output_format))
    if stats:
        click.echo("n=%s" % node_count(tree))
        click.echo("height=%s" % height(tree))
        click.echo("k=%s" % witness.k)
        click.echo("full=%s" % ("true" if is_full(tree) is not None else "false"))
    if check:
        report = cross_check(labels)
        for failure in report.failures:
            click.echo(
                "%s broke %s: %s (counterexample: %s)"
                % (failure.algo, failure.prop, failure.detail, failure.counterexample),
                err=True,
            )
        if not report.ok:
            raise LibraryFailure("cross check failed on %s labels" % len(labels))
        click.echo("check passed", err=True)


@ftree.command(short_help="Operation counts over input sizes.")
@click.option(
    "--algo",
    "-a",
    type=click.Choice(list(ALGORITHM_PARAMS)),
    multiple=True,
    help="Tier to measure, repeatable. (default: all)",
)
@click.option(
    "--size",
    "-s",
    "sizes",
    type=click.IntRange(min=0),
    multiple=True,
    help="Input length, repeatable. (default: 2^10 to 2^18)",
)
@click.option(
    "--trials",
    "-t",
    type=click.IntRange(min=1),
    default=BENCH_TRIALS,
    help="Runs per size. (default: %s)" % BENCH_TRIALS,
)
def bench(algo, sizes, trials):
    """Print algo,n,clauses,allocs,nanos rows as CSV."""
    rows = []
    for name in algo or ALGORITHM_PARAMS:
        rows.extend(measure_scaling(name, sorted(sizes or BENCH_SIZES), trials))
    click.echo(format_csv(rows), nl=False)


def run_cli(args):
    """
    Run the ftree command line and return its exit code.

    0 on success, 1 on input and usage errors, 2 when a balancer broke its
    guarantees.
    """
    try:
        code = ftree.main(args=list(args), prog_name="ftree", standalone_mode=False)
    except click.UsageError as e:
        e.show()
        return 1
    except click.ClickException as e:
        e.show()
        return e.exit_code
    except click.Abort:
        click.echo("Aborted!", err=True)
        return 1
    return code if isinstance(code, int) else 0


def main():
    sys.exit(run_cli(sys.argv[1:]))
