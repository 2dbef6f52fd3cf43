# standard library imports
import logging
from collections import defaultdict
from dataclasses import dataclass, field

from typing import Callable, Dict, List, Optional, Sequence, Set, Tuple

# third party imports
import numpy as np

# package imports
from inetcalc.model import Agent, Name, Equation, Configuration, RuleSet, NameSupply, Term
from inetcalc.model import InetError, iter_names, names_of, substitute


logger = logging.getLogger(__name__)

# The default maximum number of steps of one reduction, it counts every kind of step
DEFAULT_LIMIT = 1000000


class NoRuleError(InetError):
    pass


# #######
# REDEXES
# #######

INTERACTION = 'interaction'
INDIRECTION = 'indirection'
COLLECT = 'collect'


@dataclass(frozen=True)
class Redex:
    """
    A reducible place of a configuration. "equation" is the index of the equation the step consumes. For an
    indirection "target" is the index of the equation receiving the substitution, for a collect it is the index of
    the head term.

    CHANGELOG

    Added 07.10.2026
    """
    equation: int
    kind: str
    name: Optional[str] = None
    target: Optional[int] = None
    pair: Optional[Tuple[str, str]] = None

    def __str__(self):
        if self.kind == INTERACTION:
            return '{}><{}'.format(*self.pair)
        if self.kind == INDIRECTION:
            return '{}: {}->{}'.format(self.name, self.equation, self.target)
        return '{}: {}->head {}'.format(self.name, self.equation, self.target)


def _occurrences(configuration: Configuration) -> Dict[str, List[Tuple[str, int]]]:
    # name -> the places holding it, either ('head', index) or ('equation', index)
    occurrences = defaultdict(list)
    for index, term in enumerate(configuration.head):
        for name in iter_names(term):
            occurrences[name].append(('head', index))
    for index, equation in enumerate(configuration.equations):
        for term in equation.sides:
            for name in iter_names(term):
                occurrences[name].append(('equation', index))
    return occurrences


def _other_place(places: List[Tuple[str, int]], here: Tuple[str, int]) -> Optional[Tuple[str, int]]:
    if len(places) < 2:
        return None
    first, second = places
    return second if first == here else first


def find_redexes(configuration: Configuration, ruleset: RuleSet) -> List[Redex]:
    """
    Returns all the redexes of the configuration, ordered by the equation they consume.

    An equation with two agent sides is an interaction redex, when the rule set has a rule for the pair. An equation
    "x = t" is an indirection redex, when the other occurrence of x is in another equation, and a collect redex, when
    it is in the head. Cyclic trees "x = t" with x in t and equations naming a free x produce no redex.

    CHANGELOG

    Added 07.10.2026

    :param configuration:
    :param ruleset:
    :return:
    """
    occurrences = _occurrences(configuration)
    equations = configuration.equations
    redexes = []

    for index, equation in enumerate(equations):
        left, right = equation.sides
        if isinstance(left, Agent) and isinstance(right, Agent):
            if ruleset.lookup(left.symbol, right.symbol) is not None:
                redexes.append(Redex(index, INTERACTION, pair=(left.symbol, right.symbol)))
            continue

        for side, term in enumerate(equation.sides):
            if not isinstance(term, Name) or term.id in names_of(equation.other(side)):
                continue
            other = _other_place(occurrences[term.id], ('equation', index))
            if other is None:
                continue
            place, target = other
            if place == 'head':
                redexes.append(Redex(index, COLLECT, name=term.id, target=target))
                continue
            # Two equations "x = t" and "x = s" give the same indirection in both directions, it is listed once
            if target < index and Name(term.id) in equations[target].sides:
                continue
            redexes.append(Redex(index, INDIRECTION, name=term.id, target=target))

    return redexes


def find_blocked(configuration: Configuration, ruleset: RuleSet) -> List[Tuple[str, str]]:
    blocked = []
    for equation in configuration.equations:
        left, right = equation.sides
        if isinstance(left, Agent) and isinstance(right, Agent):
            if ruleset.lookup(left.symbol, right.symbol) is None:
                blocked.append((left.symbol, right.symbol))
    return blocked


# #########
# REDUCTION
# #########

def _without(equations: Sequence[Equation], *indexes: int) -> List[Equation]:
    return [equation for index, equation in enumerate(equations) if index not in indexes]


def _name_side(equation: Equation, name: str) -> Tuple[Term, Term]:
    # Returns the side "x" of an equation "x = t" together with t
    for side, term in enumerate(equation.sides):
        if term == Name(name):
            return term, equation.other(side)
    raise InetError('the equation {} has no side "{}"'.format(equation, name))


def step(configuration: Configuration, redex: Redex, ruleset: RuleSet, supply: NameSupply) -> Configuration:
    """
    Applies one reduction step to the configuration.

    An interaction instantiates both sides of the rule with one shared renaming taken from the supply and replaces the
    active pair with one equation per auxiliary port. An indirection substitutes "t" for "x" in the target equation, a
    collect substitutes it into the head; both remove the equation "x = t".

    CHANGELOG

    Added 07.10.2026

    :raises NoRuleError: if the active pair of an interaction redex has no rule
    :param configuration:
    :param redex:
    :param ruleset:
    :param supply:
    :return:
    """
    equations = configuration.equations
    equation = equations[redex.equation]

    if redex.kind == INTERACTION:
        left, right = equation.sides
        rule = ruleset.lookup(left.symbol, right.symbol)
        if rule is None:
            raise NoRuleError('there is no rule for the active pair {} >< {}'.format(left.symbol, right.symbol))
        left_args, right_args = rule.instantiate(supply).orient(left.symbol, right.symbol)

        created = [Equation(a, b) for a, b in zip(left.args, left_args)]
        created += [Equation(a, b) for a, b in zip(right.args, right_args)]
        return Configuration(configuration.head, _without(equations, redex.equation) + created)

    _, value = _name_side(equation, redex.name)

    if redex.kind == INDIRECTION:
        target = equations[redex.target]
        sides = list(target.sides)
        position = 0 if redex.name in names_of(sides[0]) else 1
        sides[position] = substitute(sides[position], redex.name, value)
        remaining = _without(equations, redex.equation, redex.target)
        return Configuration(configuration.head, remaining + [Equation(*sides)])

    head = list(configuration.head)
    head[redex.target] = substitute(head[redex.target], redex.name, value)
    return Configuration(head, _without(equations, redex.equation))


# #####
# STATS
# #####

@dataclass
class Stats:
    interactions: int = 0
    indirections: int = 0
    collects: int = 0

    @property
    def total(self) -> int:
        return self.interactions + self.indirections + self.collects

    def record(self, kind: str):
        if kind == INTERACTION:
            self.interactions += 1
        elif kind == INDIRECTION:
            self.indirections += 1
        else:
            self.collects += 1

    def as_dict(self) -> Dict[str, int]:
        return {
            'interactions':     self.interactions,
            'indirections':     self.indirections,
            'collects':         self.collects,
            'total':            self.total
        }


# ##################
# SCHEDULER POLICIES
# ##################

class SchedulerPolicy:
    """
    Chooses which of the currently available redexes is reduced next. "choose" is given the non empty list of
    candidates and returns the index of the chosen one.

    CHANGELOG

    Added 08.10.2026
    """
    name = 'abstract'

    def choose(self, candidates: Sequence) -> int:
        raise NotImplementedError()

    def __repr__(self):
        return self.name


class Fifo(SchedulerPolicy):
    name = 'fifo'

    def choose(self, candidates: Sequence) -> int:
        return 0


class Lifo(SchedulerPolicy):
    name = 'lifo'

    def choose(self, candidates: Sequence) -> int:
        return len(candidates) - 1


class RandomSeeded(SchedulerPolicy):
    """
    Chooses uniformly at random. Two policies created with the same seed make the same sequence of choices.

    CHANGELOG

    Added 08.10.2026
    """
    name = 'random'

    def __init__(self, seed: int = 0):
        self.seed = seed
        self.rng = np.random.default_rng(seed)

    def choose(self, candidates: Sequence) -> int:
        return int(self.rng.integers(len(candidates)))

    def __repr__(self):
        return 'random({})'.format(self.seed)


class InteractionFirst(SchedulerPolicy):
    name = 'interaction-first'

    def choose(self, candidates: Sequence) -> int:
        for index, candidate in enumerate(candidates):
            if getattr(candidate, 'kind', INTERACTION) == INTERACTION:
                return index
        return 0


POLICIES = {
    Fifo.name:              Fifo,
    Lifo.name:              Lifo,
    RandomSeeded.name:      RandomSeeded,
    InteractionFirst.name:  InteractionFirst
}


def policy_from_name(name: str, seed: int = 0) -> SchedulerPolicy:
    if name not in POLICIES:
        raise InetError('unknown policy "{}", the policies are: {}'.format(name, ', '.join(POLICIES.keys())))
    if name == RandomSeeded.name:
        return RandomSeeded(seed)
    return POLICIES[name]()


# ########
# OUTCOMES
# ########

@dataclass
class Outcome:
    """
    The result of a reduction. The subclass tells how the reduction ended, the exit code of the command line tools
    is a function of it.

    CHANGELOG

    Added 08.10.2026
    """
    configuration: Configuration
    stats: Stats = field(default_factory=Stats)
    blocked: List[Tuple[str, str]] = field(default_factory=list)
    net: Optional[object] = None

    EXIT_CODE = 0

    @property
    def variant(self) -> str:
        return self.__class__.__name__


class Normal(Outcome):
    pass


class HeadNormal(Outcome):
    pass


class Blocked(Outcome):
    EXIT_CODE = 2


class LimitExceeded(Outcome):
    EXIT_CODE = 3


TraceCallback = Callable[[int, object, Configuration], None]


def reduce(configuration: Configuration,
           ruleset: RuleSet,
           policy: Optional[SchedulerPolicy] = None,
           limit: int = DEFAULT_LIMIT,
           trace: Optional[TraceCallback] = None) -> Outcome:
    """
    Reduces the configuration until there is no redex left or the limit of total steps is reached. The policy
    chooses among the redexes of each configuration, the default is Fifo.

    CHANGELOG

    Added 08.10.2026

    :param configuration:
    :param ruleset:
    :param policy:
    :param limit: the maximum number of steps of all three kinds
    :param trace: called after every step with the step number, the redex and the new configuration
    :return:
    """
    session = ReductionSession(ruleset, policy, limit, trace)
    return session.run(configuration)


def reduce_head(configuration: Configuration,
                ruleset: RuleSet,
                policy: Optional[SchedulerPolicy] = None,
                limit: int = DEFAULT_LIMIT,
                trace: Optional[TraceCallback] = None) -> Outcome:
    """
    Reduces the configuration only until it is in head normal form. Only the redexes of the equations reachable from
    the head are eligible, the equations that do not matter for the head stay untouched.

    CHANGELOG

    Added 09.10.2026

    :param configuration:
    :param ruleset:
    :param policy:
    :param limit:
    :param trace:
    :return:
    """
    session = ReductionSession(ruleset, policy, limit, trace)
    return session.run(configuration, head=True)


class ReductionSession:
    """
    One reduction of one configuration: the policy, the step limit, the fresh name supply and the statistics.

    CHANGELOG

    Added 08.10.2026
    """
    def __init__(self,
                 ruleset: RuleSet,
                 policy: Optional[SchedulerPolicy] = None,
                 limit: int = DEFAULT_LIMIT,
                 trace: Optional[TraceCallback] = None):
        self.ruleset = ruleset
        self.policy = policy or Fifo()
        self.limit = limit
        self.trace = trace
        self.stats = Stats()

        self.logger = logging.getLogger('{}.{}'.format(__name__, self.__class__.__name__))

    def _finish(self, outcome_class, configuration: Configuration, blocked=()) -> Outcome:
        outcome = outcome_class(configuration, self.stats, list(blocked))
        self.logger.info('%s after %s steps %s', outcome.variant, self.stats.total, self.stats.as_dict())
        return outcome

    def run(self, configuration: Configuration, head: bool = False) -> Outcome:
        supply = NameSupply.for_configuration(configuration)
        current = configuration

        while True:
            redexes = find_redexes(current, self.ruleset)
            if head:
                if is_head_normal(current):
                    return self._finish(HeadNormal, current)
                reachable = reachable_equations(current)
                eligible = [redex for redex in redexes if redex.equation in reachable]
            else:
                eligible = redexes

            if not eligible:
                blocked = find_blocked(current, self.ruleset)
                if redexes or blocked:
                    return self._finish(Blocked, current, blocked)
                return self._finish(Normal, current)

            if self.stats.total >= self.limit:
                self.logger.warning('the limit of %s steps was reached', self.limit)
                return self._finish(LimitExceeded, current)

            redex = eligible[self.policy.choose(eligible)]
            current = step(current, redex, self.ruleset, supply)
            self.stats.record(redex.kind)
            self.logger.debug('%s %s %s', redex.kind, redex, current)

            if self.trace is not None:
                self.trace(self.stats.total, redex, current)


# #################
# HEAD NORMAL FORMS
# #################

AGENT_HEADED = 'AgentHeaded'
OPEN_WIRE = 'OpenWire'
CYCLIC_TREE = 'CyclicTree'
NOT_HEAD_NORMAL = 'NotHeadNormal'


def classify_head(configuration: Configuration) -> List[str]:
    """
    Classifies every head term. A term with an agent at its root is agent headed. A head name is an open wire, when
    its other end is in the head too or it has no other end, and part of a cyclic tree, when its other end lies in
    an equation "y = s" with y occurring in s. Everything else is not head normal.

    CHANGELOG

    Added 09.10.2026

    :param configuration:
    :return:
    """
    occurrences = _occurrences(configuration)
    classes = []
    for index, term in enumerate(configuration.head):
        if isinstance(term, Agent):
            classes.append(AGENT_HEADED)
            continue

        other = _other_place(occurrences[term.id], ('head', index))
        if other is None or other[0] == 'head':
            classes.append(OPEN_WIRE)
            continue

        equation = configuration.equations[other[1]]
        cyclic = any(
            isinstance(side, Name) and side.id in names_of(equation.other(position))
            and term.id in names_of(equation.other(position))
            for position, side in enumerate(equation.sides)
        )
        classes.append(CYCLIC_TREE if cyclic else NOT_HEAD_NORMAL)
    return classes


def is_head_normal(configuration: Configuration) -> bool:
    return NOT_HEAD_NORMAL not in classify_head(configuration)


def reachable_equations(configuration: Configuration) -> Set[int]:
    """
    Returns the indexes of the equations connected to the head through shared names. Cyclic trees are reached, but the
    search does not continue through them.

    CHANGELOG

    Added 09.10.2026

    :param configuration:
    :return:
    """
    occurrences = _occurrences(configuration)
    pending = [name for term in configuration.head for name in iter_names(term)]
    seen_names = set(pending)
    reachable = set()

    while pending:
        name = pending.pop()
        for place, index in occurrences[name]:
            if place != 'equation' or index in reachable:
                continue
            reachable.add(index)
            equation = configuration.equations[index]
            if equation.is_cyclic():
                continue
            for other in equation.names():
                if other not in seen_names:
                    seen_names.add(other)
                    pending.append(other)
    return reachable
