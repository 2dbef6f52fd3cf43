#!/usr/bin/env python3

# third party imports
import click

# package imports
from inetcalc.scripts import run, trace, check, bench


@click.group('inetcalc')
def cli():
    """
    Runs, traces, validates and benchmarks interaction net programs written in the .inet format.
    """
    pass


cli.add_command(run.command, 'run')
cli.add_command(trace.command, 'trace')
cli.add_command(check.command, 'check')
cli.add_command(bench.command, 'bench')


if __name__ == '__main__':
    cli()
