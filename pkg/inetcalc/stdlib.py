"""
The interaction systems shipped with the package. Every profile is a .inet file in the "profiles" folder together
with builders, which construct the configurations of its examples for arbitrary arguments, and denotations, which
read the normal forms back as python values.
"""
# standard library imports
import os
import glob
import logging
import itertools
import functools
from dataclasses import dataclass, field

from typing import Callable, Dict, Iterable, List, Optional, Sequence, Tuple, Union

# package imports
from inetcalc.model import Agent, Name, Equation, Configuration, Rule, RuleSet, Signature, Term, Violation
from inetcalc.model import InetError
from inetcalc.parser import SystemFile, load_system, ZERO, SUCC, DIFF, CONS


logger = logging.getLogger(__name__)

FOLDER_PATH = os.path.dirname(os.path.abspath(__file__))
PROFILES_PATH = os.path.join(FOLDER_PATH, 'profiles')

NIL = 'Nil'
TRUE = 'T'
FALSE = 'F'


# ########
# PROFILES
# ########

@dataclass
class Profile:
    """
    A named interaction system together with the builders of its example configurations.

    CHANGELOG

    Added 08.10.2026
    """
    name: str
    system: SystemFile
    builders: Dict[str, Callable[..., Configuration]] = field(default_factory=dict)

    @property
    def signature(self) -> Signature:
        return self.system.signature

    @property
    def ruleset(self) -> RuleSet:
        return self.system.rules

    @property
    def nets(self) -> Dict[str, Configuration]:
        return self.system.nets

    def build(self, builder: str, *args) -> Configuration:
        if builder not in self.builders:
            raise InetError('the profile "{}" has no builder "{}", the builders are: {}'.format(
                self.name, builder, ', '.join(sorted(self.builders.keys()))
            ))
        return self.builders[builder](*args)

    def merge(self, other: 'Profile') -> 'Profile':
        """
        Combines two profiles. Symbols declared by both have to agree in arity and attribute and rules for the same pair
        of symbols have to be identical.

        CHANGELOG

        Added 08.10.2026

        :raises SignatureError:
        :raises DuplicateRuleError:
        :param other:
        :return:
        """
        builders = dict(self.builders)
        builders.update(other.builders)
        return Profile('{}+{}'.format(self.name, other.name), self.system.merge(other.system), builders)

    def validate(self) -> List[Violation]:
        return self.system.validate()


def profile_names() -> List[str]:
    return sorted(
        os.path.splitext(os.path.basename(path))[0]
        for path in glob.glob(os.path.join(PROFILES_PATH, '*.inet'))
    )


def profile_path(name: str) -> str:
    path = os.path.join(PROFILES_PATH, '{}.inet'.format(name))
    if not os.path.isfile(path):
        raise InetError('there is no profile "{}", the profiles are: {}'.format(name, ', '.join(profile_names())))
    return path


@functools.lru_cache(maxsize=None)
def load_system_profile(name: str) -> SystemFile:
    logger.debug('loading the profile "%s"', name)
    return load_system(profile_path(name))


def load_profile(name: str) -> Profile:
    """
    Returns the profile with the given name. These are the composed profiles of the factory functions below, so that
    for example "lambda" also knows the numbers.

    CHANGELOG

    Added 08.10.2026

    :param name:
    :return:
    """
    factories = {
        'nat':      nat_profile,
        'bool':     bool_profile,
        'dlist':    dlist_profile,
        'comb':     comb_profile,
        'lambda':   lambda_profile,
        'amb':      amb_profile,
        'cnat':     cnat_profile,
        'endless':  endless_profile
    }
    if name in factories:
        return factories[name]()
    return Profile(name, load_system_profile(name))


def schema_rules(signature: Signature, explicit: Iterable[Rule] = ()) -> Tuple[List[Rule], List[str]]:
    """
    Synthesizes the eraser and duplicator rules of the signature against every declared symbol. A pair, for which
    there is an explicit rule, gets no schema rule but a diagnostic message.

    CHANGELOG

    Added 08.10.2026

    :param signature:
    :param explicit:
    :return: the rules and the diagnostics
    """
    explicit = {rule.key: rule for rule in explicit}
    ruleset = RuleSet(signature)

    rules = []
    diagnostics = []
    for a, b in itertools.combinations_with_replacement(sorted(signature), 2):
        rule = ruleset.schema_rule(a, b)
        if rule is None:
            continue
        if rule.key in explicit:
            diagnostics.append('the rule {} shadows the schema rule {}'.format(explicit[rule.key], rule))
            continue
        rules.append(rule)
    return rules, diagnostics


# #######
# NUMBERS
# #######

def numeral(n: int) -> Term:
    term = Agent(ZERO)
    for _ in range(n):
        term = Agent(SUCC, (term, ))
    return term


def _binary(symbol: str, first: Term, second: Term) -> Configuration:
    # "first op second" as the configuration < r | Op(second, r) = first >
    r = Name('r')
    return Configuration((r, ), (Equation(Agent(symbol, (second, r)), first), ))


def add(m: int, n: int) -> Configuration:
    return _binary('Add', numeral(m), numeral(n))


def mult(m: int, n: int) -> Configuration:
    return _binary('Mult', numeral(m), numeral(n))


def maximum(m: int, n: int) -> Configuration:
    return _binary('Max', numeral(m), numeral(n))


def minimum(m: int, n: int) -> Configuration:
    return _binary('Min', numeral(m), numeral(n))


def fact(n: int) -> Configuration:
    r = Name('r')
    return Configuration((r, ), (Equation(Agent('Fact', (r, )), numeral(n)), ))


def zero_test(n: int) -> Configuration:
    r = Name('r')
    return Configuration((r, ), (Equation(Agent('ZeroTest', (r, )), numeral(n)), ))


def nat_profile() -> Profile:
    return Profile('nat', load_system_profile('nat'), {
        'numeral':      lambda n: Configuration((numeral(n), )),
        'add':          add,
        'mult':         mult,
        'max':          maximum,
        'min':          minimum,
        'fact':         fact,
        'zero_test':    zero_test
    })


# ########
# BOOLEANS
# ########

def boolean(value: bool) -> Term:
    return Agent(TRUE if value else FALSE)


def conjunction(*values: bool) -> Configuration:
    """
    The left nested conjunction ((v1 And v2) And v3) ... of the given values.

    CHANGELOG

    Added 09.10.2026

    :param values:
    :return:
    """
    return _fold('And', values)


def disjunction(*values: bool) -> Configuration:
    return _fold('Or', values)


def same(first: bool, second: bool) -> Configuration:
    return _binary('Same', boolean(first), boolean(second))


def negation(value: bool) -> Configuration:
    r = Name('r')
    return Configuration((r, ), (Equation(Agent('Not', (r, )), boolean(value)), ))


def _fold(symbol: str, values: Sequence[bool]) -> Configuration:
    if not values:
        raise InetError('at least one value is needed')

    equations = []
    result = boolean(values[0])
    for index, value in enumerate(values[1:]):
        out = Name('r{}'.format(index))
        equations.append(Equation(Agent(symbol, (boolean(value), out)), result))
        result = out
    return Configuration((result, ), tuple(equations))


def bool_profile() -> Profile:
    return Profile('bool', load_system_profile('bool'), {
        'and':  conjunction,
        'or':   disjunction,
        'same': same,
        'not':  negation
    })


# #####
# LISTS
# #####

Item = Union[int, Term]


def _item(item: Item) -> Term:
    return numeral(item) if isinstance(item, int) else item


def cons_list(items: Iterable[Item]) -> Term:
    term = Agent(NIL)
    for item in reversed(list(items)):
        term = Agent(CONS, (_item(item), term))
    return term


def dlist(items: Iterable[Item], hole: str = 'h') -> Term:
    """
    The difference list Diff(Cons(a, Cons(b, h)), h) of the items. Integers are turned into numerals.

    CHANGELOG

    Added 09.10.2026

    :param items:
    :param hole: the name of the open end
    :return:
    """
    term = Name(hole)
    for item in reversed(list(items)):
        term = Agent(CONS, (_item(item), term))
    return Agent(DIFF, (term, Name(hole)))


def dlist_append(first: Iterable[Item], second: Iterable[Item]) -> Configuration:
    return _binary('Append', dlist(first, 'h0'), dlist(second, 'h1'))


def append(first: Iterable[Item], second: Iterable[Item]) -> Configuration:
    return _binary('Append', cons_list(first), cons_list(second))


def interleave(first: Iterable[Item], second: Iterable[Item]) -> Configuration:
    return _binary('Interleave', cons_list(first), cons_list(second))


def dlist_profile() -> Profile:
    return Profile('dlist', load_system_profile('dlist'), {
        'dlist':        lambda *items: Configuration((dlist(items), )),
        'append':       dlist_append,
        'list_append':  append,
        'interleave':   interleave
    })


# ###########
# COMBINATORS
# ###########

def comb_profile() -> Profile:
    return Profile('comb', load_system_profile('comb'))


# The combinators K and S as the agents, which take no argument yet
COMBINATORS = {
    'K': 'K0',
    'S': 'S0'
}

Expression = Union[str, int, Term, tuple]


def combinator(expression: Expression) -> Configuration:
    """
    Encodes an applicative expression. The expression is either "K", "S", an integer for a numeral, any term or a
    tuple (f, a, b, ...), which is the application ((f a) b) ... . Applying f to a with the result r gives the
    equation App(a, r) = f.

    CHANGELOG

    Added 09.10.2026

    :param expression:
    :return:
    """
    equations = []
    results = ('a{}'.format(index) for index in itertools.count())

    def encode(part: Expression) -> Term:
        if isinstance(part, tuple):
            function = encode(part[0])
            for argument in part[1:]:
                result = Name(next(results))
                equations.append(Equation(Agent('App', (encode(argument), result)), function))
                function = result
            return function
        if isinstance(part, str):
            if part not in COMBINATORS:
                raise InetError('unknown combinator "{}"'.format(part))
            return Agent(COMBINATORS[part])
        return _item(part)

    head = encode(expression)
    return Configuration((head, ), tuple(equations))


def lambda_profile() -> Profile:
    lambdas = Profile('lambda', load_system_profile('lambda'), {'combinator': combinator})
    return lambdas.merge(nat_profile())


# #####################
# CONSTANT TIME NUMBERS
# #####################

def cnumber(n: int, end: str = 'x') -> Term:
    term = Name(end)
    for _ in range(n):
        term = Agent(SUCC, (term, ))
    return Agent('C', (Name(end), term))


def cadd(m: int, n: int) -> Configuration:
    z = Name('z')
    return Configuration((z, ), (Equation(cnumber(m, 'x'), Agent('Add', (cnumber(n, 'y'), z))), ))


def cnat_profile() -> Profile:
    return Profile('cnat', load_system_profile('cnat'), {
        'number':   lambda n: Configuration((cnumber(n), )),
        'add':      cadd
    })


# ##########################
# DIVERGENCE AND PARALLEL OR
# ##########################

def endless_profile() -> Profile:
    return Profile('endless', load_system_profile('endless'), {
        'endless':  lambda: load_system_profile('endless').net('endless')
    })


def _argument(value: Optional[bool], index: int) -> Tuple[Term, List[Equation]]:
    # None stands for an argument, which never yields a value
    if value is not None:
        return boolean(value), []
    out = Name('o{}'.format(index))
    return out, [Equation(Agent('A', (out, )), Agent('B', (Agent('A', (Agent('Eps'), )), )))]


def _parallel(symbol: str, first: Optional[bool], second: Optional[bool]) -> Configuration:
    x, x_equations = _argument(first, 0)
    y, y_equations = _argument(second, 1)
    a, r = Name('a'), Name('r')
    amb = Agent('Amb', (y, Agent(symbol, (a, r)), a))
    return Configuration((r, ), tuple(x_equations + y_equations + [Equation(x, amb)]))


def parallel_or(first: Optional[bool], second: Optional[bool]) -> Configuration:
    """
    The parallel disjunction of the two arguments, which is true as soon as one of them is true, even if the other
    one never yields a value. An argument None never yields a value.

    CHANGELOG

    Added 11.10.2026

    :param first:
    :param second:
    :return:
    """
    return _parallel('Or', first, second)


def parallel_and(first: Optional[bool], second: Optional[bool]) -> Configuration:
    return _parallel('And', first, second)


def amb_profile() -> Profile:
    return Profile('amb', load_system_profile('amb'), {
        'parallel_or':  parallel_or,
        'parallel_and': parallel_and
    })


# ###########
# DENOTATIONS
# ###########

def _head(value: Union[Configuration, Term]) -> Term:
    if isinstance(value, Configuration):
        if len(value.head) != 1 or value.equations:
            raise InetError('{} does not denote a single value'.format(value))
        return value.head[0]
    return value


def denote_nat(value: Union[Configuration, Term]) -> int:
    term = _head(value)
    count = 0
    while isinstance(term, Agent) and term.symbol == SUCC:
        term = term.args[0]
        count += 1
    if term != Agent(ZERO):
        raise InetError('{} is not a number'.format(_head(value)))
    return count


def denote_bool(value: Union[Configuration, Term]) -> bool:
    term = _head(value)
    if term == Agent(TRUE):
        return True
    if term == Agent(FALSE):
        return False
    raise InetError('{} is not a boolean'.format(term))


def _denote_item(term: Term) -> Item:
    try:
        return denote_nat(term)
    except InetError:
        return term


def denote_list(value: Union[Configuration, Term]) -> List[Item]:
    term = _head(value)
    items = []
    while isinstance(term, Agent) and term.symbol == CONS:
        items.append(_denote_item(term.args[0]))
        term = term.args[1]
    if term != Agent(NIL):
        raise InetError('{} is not a list'.format(_head(value)))
    return items


def denote_dlist(value: Union[Configuration, Term]) -> List[Item]:
    term = _head(value)
    if not (isinstance(term, Agent) and term.symbol == DIFF and isinstance(term.args[1], Name)):
        raise InetError('{} is not a difference list'.format(term))

    hole = term.args[1]
    items = []
    term = term.args[0]
    while isinstance(term, Agent) and term.symbol == CONS:
        items.append(_denote_item(term.args[0]))
        term = term.args[1]
    if term != hole:
        raise InetError('{} is not a difference list'.format(_head(value)))
    return items


def denote_cnat(value: Union[Configuration, Term]) -> int:
    term = _head(value)
    if not (isinstance(term, Agent) and term.symbol == 'C' and isinstance(term.args[0], Name)):
        raise InetError('{} is not a constant time number'.format(term))

    end = term.args[0]
    count = 0
    term = term.args[1]
    while isinstance(term, Agent) and term.symbol == SUCC:
        term = term.args[0]
        count += 1
    if term != end:
        raise InetError('{} is not a constant time number'.format(_head(value)))
    return count
