#!/usr/bin/env python3

# standard library imports
import sys
import logging

# third party imports
import click

# package imports
from inetcalc.model import InetError
from inetcalc.scripts.util import logging_config, logging_format, reduction_options
from inetcalc.scripts.util import RunRequest, run_request, echo_trace


logger = logging.getLogger(__name__)


@click.command('trace')
@reduction_options
def command(paths, net, engine, strategy, policy, seed, limit, fair, log):
    """
    Given the PATHS of one or more .inet files (or the names of shipped profiles), this will reduce one of the nets
    and print one line per reduction step: the step number, the kind of the step, the redex and the configuration
    after the step, separated by tabs. The exit status is the same as for "run".
    """
    logging.basicConfig(format=logging_format, level=logging_config[log])

    request = RunRequest.from_options(paths, net, engine, strategy, policy, seed, limit, fair, trace=True)
    try:
        outcome = run_request(request, trace=echo_trace)
    except InetError as error:
        logger.error(str(error))
        click.echo('error: {}'.format(error), err=True)
        sys.exit(1)

    sys.exit(outcome.EXIT_CODE)


if __name__ == '__main__':
    command()
