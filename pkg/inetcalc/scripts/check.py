#!/usr/bin/env python3

# standard library imports
import os
import sys
import logging

# third party imports
import click
import texttable

# package imports
from inetcalc.model import InetError
from inetcalc.parser import load_system
from inetcalc.stdlib import load_profile
from inetcalc.scripts.util import logging_config, logging_format, log_help


logger = logging.getLogger(__name__)


def check_path(path: str) -> list:
    """
    Returns the rows of the report for a single file: one row per problem, one per explicit rule shadowing a schema
    rule and a summary row if the file is valid. The status column is "error", "note" or "ok".

    CHANGELOG

    Added 15.10.2026

    :param path:
    :return:
    """
    try:
        system = load_system(path) if os.path.isfile(path) else load_profile(path).system
    except InetError as error:
        logger.error('%s: %s', path, error)
        return [[path, 'error', str(error)]]

    rows = [[path, 'error', str(violation)] for violation in system.validate()]
    rows += [[path, 'note', message] for message in system.rules.shadowed()]
    if not any(row[1] == 'error' for row in rows):
        rows.append([path, 'ok', '{} symbols, {} rules, {} nets'.format(
            len(system.signature), len(system.rules), len(system.nets)
        )])
    return rows


@click.command('check')
@click.option('--log', '-l', default='ERROR', help=log_help)
@click.argument('paths', nargs=-1, required=True)
def command(paths, log):
    """
    Given the PATHS of one or more .inet files (or the names of shipped profiles), this will parse and validate each of
    them and display the problems in a table. The exit status is 1 if any file has an error.
    """
    logging.basicConfig(format=logging_format, level=logging_config[log])

    results = []
    for path in paths:
        results += check_path(path)

    table = texttable.Texttable(max_width=0)
    table.set_deco(texttable.Texttable.HEADER)
    table.set_cols_dtype(['t', 't', 't'])
    results.insert(0, ['File', 'Status', 'Message'])
    table.add_rows(results)

    click.echo(table.draw())
    if any(row[1] == 'error' for row in results[1:]):
        sys.exit(1)


if __name__ == '__main__':
    command()
