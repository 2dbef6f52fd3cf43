#!/usr/bin/env python3

# standard library imports
import io
import logging
from collections import defaultdict

# third party imports
import click
import numpy as np

# package imports
from inetcalc.calculus import reduce
from inetcalc.graph import config_to_net, graph_reduce
from inetcalc.stdlib import nat_profile, dlist_profile, cnat_profile
from inetcalc.stdlib import add, dlist_append, append, cadd
from inetcalc.scripts.util import logging_config, logging_format, log_help, engine_help, engines, GRAPH


logger = logging.getLogger(__name__)

# For every benchmark the profile, the builder, whether it takes two sizes and the default maximum size
BENCHMARKS = {
    'dlist':    (dlist_profile, lambda n: dlist_append(range(n), range(n)), False, 64),
    'list':     (dlist_profile, lambda n: append(range(n), range(n)), False, 64),
    'cnat':     (cnat_profile, cadd, True, 8),
    'nat':      (nat_profile, add, True, 8)
}
benchmarks = defaultdict(lambda: 'dlist', **{name: name for name in BENCHMARKS.keys()})

profile_help = "The benchmark to run: 'dlist' appends two difference lists of length n, 'list' two classic lists, " \
               "'cnat' adds m and n in the constant time encoding and 'nat' adds unary numbers. Default is 'dlist'"

max_help = "The largest size. Default is 64 for the lists and 8 for the numbers"

output_help = "The path of the CSV file to write. By default the table is printed to the console"


def measure(profile, configuration, engine: str) -> list:
    if engine == GRAPH:
        outcome = graph_reduce(config_to_net(configuration, profile.signature), profile.ruleset)
    else:
        outcome = reduce(configuration, profile.ruleset)
    logger.info('%s: %s', outcome.variant, outcome.stats.as_dict())
    return [outcome.stats.interactions, outcome.stats.total]


def bench_rows(benchmark: str, maximum: int, engine: str) -> np.ndarray:
    """
    Reduces the configurations of the benchmark for all the sizes up to "maximum" and returns a table of the sizes
    and the numbers of interactions and of all steps.

    CHANGELOG

    Added 15.10.2026

    :param benchmark:
    :param maximum:
    :param engine:
    :return:
    """
    factory, builder, binary, _ = BENCHMARKS[benchmark]
    profile = factory()

    rows = []
    if binary:
        for m in range(maximum + 1):
            for n in range(maximum + 1):
                rows.append([m, n] + measure(profile, builder(m, n), engine))
    else:
        for n in range(1, maximum + 1):
            rows.append([n] + measure(profile, builder(n), engine))
    return np.array(rows, dtype=int)


@click.command('bench')
@click.option('--profile', '-p', default='dlist', help=profile_help)
@click.option('--max', '-m', 'maximum', default=None, type=int, help=max_help)
@click.option('--engine', '-e', default='calculus', help=engine_help)
@click.option('--output', '-o', default=None, help=output_help)
@click.option('--log', '-l', default='ERROR', help=log_help)
def command(profile, maximum, engine, output, log):
    """
    Measures how the number of reduction steps grows with the size of the input and writes the result as CSV: the
    sizes, the number of interactions and the total number of steps.
    """
    logging.basicConfig(format=logging_format, level=logging_config[log])

    benchmark = benchmarks[profile]
    binary = BENCHMARKS[benchmark][2]
    if maximum is None:
        maximum = BENCHMARKS[benchmark][3]

    table = bench_rows(benchmark, maximum, engines[engine])
    header = ','.join((['m', 'n'] if binary else ['n']) + ['interactions', 'total'])

    buffer = io.StringIO()
    np.savetxt(buffer, table, fmt='%d', delimiter=',', header=header, comments='')
    if output is None:
        click.echo(buffer.getvalue(), nl=False)
    else:
        with open(output, mode='w') as file:
            file.write(buffer.getvalue())
        click.echo('WROTE {} ROWS TO {}'.format(len(table), output))


if __name__ == '__main__':
    command()
