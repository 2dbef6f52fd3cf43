#!/usr/bin/env python3

# standard library imports
import sys
import logging

# third party imports
import click

# package imports
from inetcalc.model import InetError
from inetcalc.scripts.util import logging_config, logging_format, reduction_options, json_help, trace_help
from inetcalc.scripts.util import RunRequest, load_paths, run_request, render_outcome, echo_trace


logger = logging.getLogger(__name__)


@click.command('run')
@click.option('--trace', '-t', is_flag=True, help=trace_help)
@click.option('--json', '-j', 'as_json', is_flag=True, help=json_help)
@reduction_options
def command(paths, net, engine, strategy, policy, seed, limit, fair, log, as_json, trace):
    """
    Given the PATHS of one or more .inet files (or the names of shipped profiles), this will reduce one of the nets
    declared in them and print the final configuration, how the reduction ended and the number of steps of each
    kind. The exit status is 0 for a normal or head normal form, 2 for a blocked configuration and 3, when the step
    limit was reached.
    """
    logging.basicConfig(format=logging_format, level=logging_config[log])

    request = RunRequest.from_options(paths, net, engine, strategy, policy, seed, limit, fair, as_json, trace)
    try:
        system = load_paths(request.paths)
        outcome = run_request(request, system, trace=echo_trace if request.trace else None)
    except InetError as error:
        logger.error(str(error))
        click.echo('error: {}'.format(error), err=True)
        sys.exit(1)

    click.echo(render_outcome(outcome, system, request.json))
    sys.exit(outcome.EXIT_CODE)


if __name__ == '__main__':
    command()
