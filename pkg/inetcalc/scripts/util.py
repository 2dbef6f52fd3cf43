# standard library imports
import os
import logging
from collections import defaultdict
from dataclasses import dataclass

from typing import Callable, Optional, Sequence

# third party imports
import click
import demjson3

# package imports
from inetcalc.model import Configuration
from inetcalc.parser import SystemFile, load_system
from inetcalc.calculus import Outcome, TraceCallback, DEFAULT_LIMIT, reduce, reduce_head, policy_from_name
from inetcalc.graph import FULL, HEAD, config_to_net, graph_reduce
from inetcalc.stdlib import load_profile


# ##############
# LOGGING CONFIG
# ##############

# Translates the string of the --log option into the logging level. An unknown string gives the debug level.
kwargs = {
    'DEBUG':    logging.DEBUG,
    'INFO':     logging.INFO,
    'WARNING':  logging.WARNING,
    'ERROR':    logging.ERROR
}
logging_config = defaultdict(lambda: logging.DEBUG, **kwargs)

logging_format = '%(asctime)s - %(name)s - %(levelname)s - %(message)s'


# ###################
# ENGINES AND OPTIONS
# ###################

CALCULUS = 'calculus'
GRAPH = 'graph'

_engines = {
    'calculus':     CALCULUS,
    'calc':         CALCULUS,
    'c':            CALCULUS,
    'graph':        GRAPH,
    'g':            GRAPH
}
engines = defaultdict(lambda: CALCULUS, **_engines)

_strategies = {
    'full':     FULL,
    'normal':   FULL,
    'head':     HEAD
}
strategies = defaultdict(lambda: FULL, **_strategies)

_policies = {
    'fifo':                 'fifo',
    'FIFO':                 'fifo',
    'lifo':                 'lifo',
    'LIFO':                 'lifo',
    'random':               'random',
    'random-seeded':        'random',
    'interaction-first':    'interaction-first',
    'interaction':          'interaction-first'
}
policies = defaultdict(lambda: 'fifo', **_policies)


# ##################
# COMMAND HELP TEXTS
# ##################

log_help = "The level of logging to be displayed in the console output. The options are 'ERROR' for only displaying " \
           "error messages, 'INFO' for the outcome of the reductions or 'DEBUG' for displaying every single step. " \
           "Default is 'ERROR'"

net_help = "The name of the net to be reduced. Default is the first net declared in the files."

engine_help = "The reduction engine: 'calculus' rewrites configurations, 'graph' rewrites port graphs and is the " \
              "only one to support amb agents. Default is 'calculus'"

strategy_help = "'full' reduces to the normal form, 'head' stops as soon as the head is in head normal form. " \
                "Default is 'full'"

policy_help = "The scheduler choosing the next redex: 'fifo', 'lifo', 'random' or 'interaction-first'. " \
              "Default is 'fifo'"

seed_help = "The seed of the 'random' policy. Default is 0"

limit_help = "The maximum number of reduction steps. The environment variable INETCALC_LIMIT sets it as well. " \
             "Default is 1000000"

fair_help = "Setting this flag makes the graph engine always rewrite the oldest active pair first."

json_help = "Setting this flag prints the outcome as a JSON object, which also contains the final net in the JSON " \
            "net format."

trace_help = "Setting this flag prints every reduction step before the outcome."


def reduction_options(function: Callable) -> Callable:
    """
    Adds the options describing one reduction, which are shared by the "run" and "trace" commands, to the command
    function.

    CHANGELOG

    Added 14.10.2026

    :param function:
    :return:
    """
    options = [
        click.option('--net', '-n', default=None, help=net_help),
        click.option('--engine', '-e', default='calculus', help=engine_help),
        click.option('--strategy', '-s', default='full', help=strategy_help),
        click.option('--policy', '-p', default='fifo', help=policy_help),
        click.option('--seed', default=0, type=int, help=seed_help),
        click.option('--limit', default=DEFAULT_LIMIT, type=int, envvar='INETCALC_LIMIT', help=limit_help),
        click.option('--fair', '-f', is_flag=True, help=fair_help),
        click.option('--log', '-l', default='ERROR', help=log_help),
        click.argument('paths', nargs=-1, required=True)
    ]
    for option in reversed(options):
        function = option(function)
    return function


# ###########
# RUN REQUEST
# ###########

@dataclass
class RunRequest:
    """
    Everything one invocation of "run" or "trace" needs to know. The seed only matters for the random policy and the
    fairness only for the graph engine.

    CHANGELOG

    Added 14.10.2026
    """
    paths: Sequence[str]
    net: Optional[str] = None
    engine: str = CALCULUS
    strategy: str = FULL
    policy: str = 'fifo'
    seed: int = 0
    limit: int = DEFAULT_LIMIT
    fairness: bool = False
    json: bool = False
    trace: bool = False

    @classmethod
    def from_options(cls, paths, net, engine, strategy, policy, seed, limit, fair, json=False, trace=False):
        return cls(
            paths=list(paths),
            net=net,
            engine=engines[engine],
            strategy=strategies[strategy],
            policy=policies[policy],
            seed=seed,
            limit=limit,
            fairness=fair,
            json=json,
            trace=trace
        )


def load_paths(paths: Sequence[str]) -> SystemFile:
    """
    Loads and merges the systems of all the given paths. A path, which is not an existing file, is taken to be the
    name of a shipped profile.

    CHANGELOG

    Added 14.10.2026

    :param paths:
    :return:
    """
    system = None
    for path in paths:
        loaded = load_system(path) if os.path.isfile(path) else load_profile(path).system
        system = loaded if system is None else system.merge(loaded)
    return system


def run_request(request: RunRequest,
                system: Optional[SystemFile] = None,
                trace: Optional[TraceCallback] = None) -> Outcome:
    system = system or load_paths(request.paths)
    configuration = system.net(request.net)
    policy = policy_from_name(request.policy, request.seed)

    if request.engine == GRAPH:
        net = config_to_net(configuration, system.signature)
        return graph_reduce(
            net,
            system.rules,
            policy=policy,
            fairness=request.fairness,
            limit=request.limit,
            strategy=request.strategy,
            trace=trace
        )

    reducer = reduce_head if request.strategy == HEAD else reduce
    return reducer(configuration, system.rules, policy=policy, limit=request.limit, trace=trace)


# ######
# OUTPUT
# ######

def trace_line(step: int, redex, configuration: Configuration) -> str:
    return '{}\t{}\t{}\t{}'.format(step, redex.kind, redex, configuration)


def echo_trace(step: int, redex, configuration: Configuration):
    click.echo(trace_line(step, redex, configuration))


def render_outcome(outcome: Outcome, system: Optional[SystemFile] = None, as_json: bool = False) -> str:
    """
    Returns the text to print for the outcome of a reduction. The text form is the final configuration, the name of
    the outcome and the statistics; the JSON form additionally contains the final net and the blocked pairs.

    CHANGELOG

    Added 14.10.2026

    :param outcome:
    :param system: needed to convert the configuration of a calculus outcome into a net
    :param as_json:
    :return:
    """
    if not as_json:
        return '{}\n{}\n{}'.format(outcome.configuration, outcome.variant, demjson3.encode(outcome.stats.as_dict()))

    net = outcome.net
    if net is None:
        net = config_to_net(outcome.configuration, system.signature if system is not None else None)
    return demjson3.encode({
        'outcome':          outcome.variant,
        'configuration':    str(outcome.configuration),
        'stats':            outcome.stats.as_dict(),
        'net':              net.to_json_data(),
        'blocked':          [list(pair) for pair in outcome.blocked]
    })
