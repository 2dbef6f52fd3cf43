# standard library imports
import logging
import itertools
from collections import Counter
from dataclasses import dataclass
from functools import cached_property

from typing import Dict, Iterable, Iterator, List, Optional, Tuple, Union


logger = logging.getLogger(__name__)


# ##########
# EXCEPTIONS
# ##########

class InetError(Exception):
    """
    Base class for all the errors raised by the inetcalc package.

    CHANGELOG

    Added 02.10.2026
    """
    pass


class RenameError(InetError):
    pass


class SubstError(InetError):
    pass


class SignatureError(InetError):
    pass


class DuplicateRuleError(InetError):
    pass


# #####
# TERMS
# #####

@dataclass(frozen=True)
class Name:
    """
    A name (a wire end) within a term. Names which occur once in a configuration are free, names which occur twice
    are bound.

    CHANGELOG

    Added 02.10.2026
    """
    id: str

    def __str__(self):
        return self.id


@dataclass(frozen=True)
class Agent:
    """
    An agent node of a term: the symbol and one argument term for every auxiliary port of the symbol. The principal
    port of the agent is the root of the term itself.

    CHANGELOG

    Added 02.10.2026
    """
    symbol: str
    args: Tuple['Term', ...] = ()

    def __post_init__(self):
        # Lists are accepted for convenience, but the stored value has to be hashable
        object.__setattr__(self, 'args', tuple(self.args))

    def __str__(self):
        if not self.args:
            return self.symbol
        return '{}({})'.format(self.symbol, ','.join(str(arg) for arg in self.args))


Term = Union[Name, Agent]


def iter_names(term: Term) -> Iterator[str]:
    """
    Yields the names of the term in left to right order, bound names twice.

    CHANGELOG

    Added 02.10.2026

    :param term:
    :return:
    """
    if isinstance(term, Name):
        yield term.id
    else:
        for arg in term.args:
            yield from iter_names(arg)


def names_of(term: Term) -> Counter:
    """
    Returns the multiset of the names occurring in the given term as a Counter. The counter keeps the first
    occurrence order of the names.

    CHANGELOG

    Added 02.10.2026

    :param term:
    :return:
    """
    return Counter(iter_names(term))


def iter_agents(term: Term) -> Iterator[Agent]:
    if isinstance(term, Agent):
        yield term
        for arg in term.args:
            yield from iter_agents(arg)


def relabel(term: Term, mapping: Dict[str, str]) -> Term:
    """
    Replaces every occurrence of the names in the mapping keys by the corresponding value. Unlike "rename" this does
    not check any linearity condition, it is the building block for renaming whole rules and configurations.

    CHANGELOG

    Added 02.10.2026

    :param term:
    :param mapping:
    :return:
    """
    if isinstance(term, Name):
        return Name(mapping.get(term.id, term.id))
    return Agent(term.symbol, tuple(relabel(arg, mapping) for arg in term.args))


def _replace(term: Term, name: str, replacement: Term) -> Term:
    if isinstance(term, Name):
        return replacement if term.id == name else term
    return Agent(term.symbol, tuple(_replace(arg, name, replacement) for arg in term.args))


def rename(term: Term, x: str, y: str) -> Term:
    """
    Replaces the single free occurrence of the name "x" within the term with the name "y".

    CHANGELOG

    Added 02.10.2026

    :raises RenameError: if x does not occur exactly once or y already occurs in the term
    :param term:
    :param x:
    :param y:
    :return:
    """
    names = names_of(term)
    if names[x] != 1:
        raise RenameError('cannot rename "{}": it occurs {} times in {}'.format(x, names[x], term))
    if y in names:
        raise RenameError('cannot rename "{}" to "{}": "{}" already occurs in {}'.format(x, y, y, term))
    return _replace(term, x, Name(y))


def substitute(term: Term, x: str, replacement: Term) -> Term:
    """
    Replaces the single occurrence of the name "x" within "term" by the term "replacement".

    The result has to stay linear: every name of the result may occur at most twice. The replacement may therefore
    share a name with the term, which is exactly what happens when an equation is substituted into another one that
    holds the other end of a wire.

    CHANGELOG

    Added 02.10.2026

    :raises SubstError: if x does not occur exactly once or the result would break linearity
    :param term:
    :param x:
    :param replacement:
    :return:
    """
    names = names_of(term)
    if names[x] != 1:
        raise SubstError('cannot substitute "{}": it occurs {} times in {}'.format(x, names[x], term))

    names[x] -= 1
    names += names_of(replacement)
    overused = sorted(name for name, count in names.items() if count > 2)
    if overused:
        raise SubstError('substituting {} for "{}" in {} breaks linearity of {}'.format(
            replacement, x, term, ', '.join(overused)
        ))

    return _replace(term, x, replacement)


# #########################
# EQUATIONS, CONFIGURATIONS
# #########################

@dataclass(frozen=True)
class Equation:
    """
    An unordered pair of terms. The sides are stored in a canonical orientation (the side with the smaller printed
    form comes first), so that two equations differing only in their orientation compare equal and hash equal.

    CHANGELOG

    Added 02.10.2026
    """
    left: Term
    right: Term

    def __post_init__(self):
        if str(self.right) < str(self.left):
            left, right = self.right, self.left
            object.__setattr__(self, 'left', left)
            object.__setattr__(self, 'right', right)

    @property
    def sides(self) -> Tuple[Term, Term]:
        return self.left, self.right

    def other(self, side: int) -> Term:
        return self.sides[1 - side]

    def names(self) -> Counter:
        return names_of(self.left) + names_of(self.right)

    def is_cyclic(self) -> bool:
        """
        Whether the equation is a cyclic tree "y = s" where the name y occurs within s itself.

        CHANGELOG

        Added 04.10.2026

        :return:
        """
        for side, term in enumerate(self.sides):
            if isinstance(term, Name) and term.id in names_of(self.other(side)):
                return True
        return False

    def __str__(self):
        return '{} = {}'.format(self.left, self.right)


@dataclass(frozen=True)
class Configuration:
    """
    A head sequence of terms (the ordered interface) together with a multiset of equations. The equations are kept
    sorted by their printed form, which makes the equation order irrelevant for equality.

    CHANGELOG

    Added 02.10.2026
    """
    head: Tuple[Term, ...] = ()
    equations: Tuple[Equation, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, 'head', tuple(self.head))
        object.__setattr__(self, 'equations', tuple(sorted(self.equations, key=str)))

    @cached_property
    def names(self) -> Counter:
        counter = Counter()
        for term in self.head:
            counter.update(iter_names(term))
        for equation in self.equations:
            counter.update(iter_names(equation.left))
            counter.update(iter_names(equation.right))
        return counter

    @property
    def free_names(self) -> List[str]:
        return [name for name, count in self.names.items() if count == 1]

    @property
    def bound_names(self) -> List[str]:
        return [name for name, count in self.names.items() if count == 2]

    def terms(self) -> Iterator[Term]:
        yield from self.head
        for equation in self.equations:
            yield from equation.sides

    def __str__(self):
        parts = ['<']
        if self.head:
            parts.append(', '.join(str(term) for term in self.head))
        parts.append('|')
        if self.equations:
            parts.append(', '.join(str(equation) for equation in self.equations))
        parts.append('>')
        return ' '.join(parts)


# #########
# SIGNATURE
# #########

PLAIN = 'plain'
ERASER = 'eraser'
DUPLICATOR = 'duplicator'
AMB = 'amb'

ATTRIBUTES = (PLAIN, ERASER, DUPLICATOR, AMB)

# The arity every symbol with a builtin attribute is required to have
ATTRIBUTE_ARITIES = {
    ERASER:         0,
    DUPLICATOR:     2,
    AMB:            3,
}


@dataclass(frozen=True)
class SymbolInfo:
    arity: int
    attribute: str = PLAIN


class Signature:
    """
    The set of declared agent symbols, each with its arity and an attribute, which marks the builtin eraser,
    duplicator and amb symbols.

    CHANGELOG

    Added 02.10.2026
    """
    def __init__(self, symbols: Optional[Dict[str, SymbolInfo]] = None):
        self._symbols: Dict[str, SymbolInfo] = dict(symbols or {})

    @classmethod
    def from_arities(cls, **arities):
        """
        Creates a signature of plain symbols from keyword arguments, e.g. Signature.from_arities(Z=0, S=1).

        CHANGELOG

        Added 05.10.2026

        :param arities:
        :return:
        """
        return cls({symbol: SymbolInfo(arity) for symbol, arity in arities.items()})

    def arity(self, symbol: str) -> int:
        return self._symbols[symbol].arity

    def attribute(self, symbol: str) -> str:
        return self._symbols[symbol].attribute

    def _with_attribute(self, attribute: str) -> Optional[str]:
        for symbol, info in self._symbols.items():
            if info.attribute == attribute:
                return symbol
        return None

    @property
    def eraser(self) -> Optional[str]:
        return self._with_attribute(ERASER)

    @property
    def duplicator(self) -> Optional[str]:
        return self._with_attribute(DUPLICATOR)

    @property
    def amb(self) -> Optional[str]:
        return self._with_attribute(AMB)

    def principal_ports(self, symbol: str) -> Tuple[int, ...]:
        # An amb agent is the only agent with two principal ports
        return (0, 1) if self.attribute(symbol) == AMB else (0, )

    def merge(self, other: 'Signature') -> 'Signature':
        """
        Returns the union of both signatures. Symbols declared by both have to agree in arity and attribute.

        CHANGELOG

        Added 06.10.2026

        :raises SignatureError: for conflicting declarations
        :param other:
        :return:
        """
        symbols = dict(self._symbols)
        for symbol, info in other.items():
            if symbol in symbols and symbols[symbol] != info:
                raise SignatureError('symbol "{}" is declared as {} and as {}'.format(symbol, symbols[symbol], info))
            symbols[symbol] = info
        return Signature(symbols)

    def violations(self) -> List[str]:
        messages = []
        for symbol, info in self._symbols.items():
            if not symbol:
                messages.append('symbol names must not be empty')
            if info.attribute not in ATTRIBUTES:
                messages.append('symbol "{}" has the unknown attribute "{}"'.format(symbol, info.attribute))
            elif info.attribute in ATTRIBUTE_ARITIES and info.arity != ATTRIBUTE_ARITIES[info.attribute]:
                messages.append('symbol "{}" is @{} and must have arity {}, not {}'.format(
                    symbol, info.attribute, ATTRIBUTE_ARITIES[info.attribute], info.arity
                ))
        for attribute in ATTRIBUTE_ARITIES.keys():
            symbols = [symbol for symbol, info in self._symbols.items() if info.attribute == attribute]
            if len(symbols) > 1:
                messages.append('only one symbol may be @{}, found {}'.format(attribute, ', '.join(symbols)))
        return messages

    def items(self):
        return self._symbols.items()

    def __contains__(self, symbol):
        return symbol in self._symbols

    def __getitem__(self, symbol) -> SymbolInfo:
        return self._symbols[symbol]

    def __iter__(self):
        return iter(self._symbols)

    def __len__(self):
        return len(self._symbols)

    def __eq__(self, other):
        return isinstance(other, Signature) and self._symbols == other._symbols

    def __repr__(self):
        return 'Signature({})'.format(self._symbols)


# #####
# RULES
# #####

@dataclass(frozen=True)
class Rule:
    """
    An interaction rule "left[left_args] >< right[right_args]". The argument terms are what the auxiliary ports of
    the two agents of the active pair get connected to. Every name of a rule occurs exactly twice.

    CHANGELOG

    Added 02.10.2026
    """
    left: str
    right: str
    left_args: Tuple[Term, ...] = ()
    right_args: Tuple[Term, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, 'left_args', tuple(self.left_args))
        object.__setattr__(self, 'right_args', tuple(self.right_args))

    @property
    def key(self) -> Tuple[str, str]:
        return rule_key(self.left, self.right)

    def names(self) -> Counter:
        counter = Counter()
        for term in itertools.chain(self.left_args, self.right_args):
            counter.update(iter_names(term))
        return counter

    def orient(self, a: str, b: str) -> Tuple[Tuple[Term, ...], Tuple[Term, ...]]:
        """
        Given the symbols of an active pair in the order (a, b), returns the argument terms for the agent a and for the
        agent b.

        CHANGELOG

        Added 03.10.2026

        :param a:
        :param b:
        :return:
        """
        if (a, b) == (self.left, self.right):
            return self.left_args, self.right_args
        if (a, b) == (self.right, self.left):
            return self.right_args, self.left_args
        raise InetError('rule {} does not apply to the pair {} >< {}'.format(self, a, b))

    def instantiate(self, supply: 'NameSupply') -> 'Rule':
        """
        Returns a copy of the rule, where every name was replaced by a fresh name of the supply. Names are renamed in
        the order of their first occurrence.

        CHANGELOG

        Added 03.10.2026

        :param supply:
        :return:
        """
        mapping = {name: supply.fresh().id for name in self.names()}
        return Rule(
            self.left,
            self.right,
            tuple(relabel(term, mapping) for term in self.left_args),
            tuple(relabel(term, mapping) for term in self.right_args)
        )

    def __str__(self):
        return '{} >< {}'.format(_rule_side(self.left, self.left_args), _rule_side(self.right, self.right_args))


def _rule_side(symbol: str, args: Tuple[Term, ...]) -> str:
    if not args:
        return symbol
    return '{}[{}]'.format(symbol, ','.join(str(arg) for arg in args))


def rule_key(a: str, b: str) -> Tuple[str, str]:
    return (a, b) if a <= b else (b, a)


def eraser_rule(eraser: str, symbol: str, arity: int) -> Rule:
    """
    The eraser schema for one symbol: the eraser meeting an agent leaves one eraser on each auxiliary port of it.

    CHANGELOG

    Added 03.10.2026

    :param eraser:
    :param symbol:
    :param arity:
    :return:
    """
    return Rule(eraser, symbol, (), tuple(Agent(eraser) for _ in range(arity)))


def duplicator_rule(duplicator: str, symbol: str, arity: int) -> Rule:
    """
    The duplicator schema for one symbol: two copies of the agent are sent along the two auxiliary ports of the
    duplicator, while each auxiliary port of the agent receives a duplicator joining the matching ports of the copies.

    CHANGELOG

    Added 03.10.2026

    :param duplicator:
    :param symbol:
    :param arity:
    :return:
    """
    first = tuple(Name('x{}'.format(index)) for index in range(1, arity + 1))
    second = tuple(Name('y{}'.format(index)) for index in range(1, arity + 1))
    return Rule(
        duplicator,
        symbol,
        (Agent(symbol, first), Agent(symbol, second)),
        tuple(Agent(duplicator, (x, y)) for x, y in zip(first, second))
    )


class RuleSet:
    """
    The rules of an interaction system, indexed by the unordered pair of symbols. Besides the explicit rules, the
    eraser and duplicator schema rules are synthesized lazily for every pair, which has no explicit rule. An explicit
    rule always shadows the schema.

    CHANGELOG

    Added 03.10.2026
    """
    def __init__(self, signature: Signature, rules: Iterable[Rule] = ()):
        self.signature = signature
        self._rules: Dict[Tuple[str, str], Rule] = {}
        self._schema: Dict[Tuple[str, str], Optional[Rule]] = {}

        self.logger = logging.getLogger('{}.{}'.format(__name__, self.__class__.__name__))

        for rule in rules:
            self.add(rule)

    def add(self, rule: Rule):
        if rule.key in self._rules:
            raise DuplicateRuleError('there is already a rule for {} >< {}: {}'.format(
                rule.left, rule.right, self._rules[rule.key]
            ))
        self._rules[rule.key] = rule
        self._schema.pop(rule.key, None)

        if self.schema_rule(rule.left, rule.right) is not None:
            self.logger.info('explicit rule %s shadows the schema rule for %s >< %s', rule, rule.left, rule.right)

    def explicit(self, a: str, b: str) -> Optional[Rule]:
        return self._rules.get(rule_key(a, b))

    def schema_rule(self, a: str, b: str) -> Optional[Rule]:
        """
        Returns the eraser or duplicator schema rule for the pair (a, b) or None. When the pair consists of the eraser
        and the duplicator, the eraser schema is used; both give the same net.

        CHANGELOG

        Added 03.10.2026

        :param a:
        :param b:
        :return:
        """
        if a not in self.signature or b not in self.signature:
            return None
        if self.signature.amb in (a, b):
            return None

        for attribute, factory in ((ERASER, eraser_rule), (DUPLICATOR, duplicator_rule)):
            for agent, other in ((a, b), (b, a)):
                if self.signature.attribute(agent) == attribute:
                    return factory(agent, other, self.signature.arity(other))
        return None

    def lookup(self, a: str, b: str) -> Optional[Rule]:
        """
        Returns the rule for the active pair (a, b), which is the same rule for (b, a), or None if there is no rule.

        CHANGELOG

        Added 03.10.2026

        :param a:
        :param b:
        :return:
        """
        key = rule_key(a, b)
        if key in self._rules:
            return self._rules[key]
        if key not in self._schema:
            self._schema[key] = self.schema_rule(a, b)
        return self._schema[key]

    def shadowed(self) -> List[str]:
        return [
            'explicit rule {} shadows the schema rule'.format(rule)
            for rule in self._rules.values() if self.schema_rule(rule.left, rule.right) is not None
        ]

    def merge(self, other: 'RuleSet') -> 'RuleSet':
        """
        Returns a new rule set over the merged signatures with the rules of both. Rules for the same pair have to be
        identical.

        CHANGELOG

        Added 06.10.2026

        :raises DuplicateRuleError: for two different rules of the same pair
        :param other:
        :return:
        """
        merged = RuleSet(self.signature.merge(other.signature), self)
        for rule in other:
            existing = merged.explicit(rule.left, rule.right)
            if existing is None:
                merged.add(rule)
            elif not rules_equivalent(existing, rule):
                raise DuplicateRuleError('conflicting rules {} and {}'.format(existing, rule))
        return merged

    def __iter__(self) -> Iterator[Rule]:
        return iter(self._rules.values())

    def __len__(self):
        return len(self._rules)

    def __contains__(self, key):
        return rule_key(*key) in self._rules


def rules_equivalent(first: Rule, second: Rule) -> bool:
    """
    Whether two rules for the same pair are equal up to the names used and the order of their two sides.

    CHANGELOG

    Added 06.10.2026

    :param first:
    :param second:
    :return:
    """
    if first.key != second.key:
        return False
    a_args, b_args = second.orient(first.left, first.right)
    left = Configuration(first.left_args + first.right_args)
    right = Configuration(a_args + b_args)
    if first.left == first.right and not alpha_equal(left, right):
        right = Configuration(b_args + a_args)
    return alpha_equal(left, right)


# ###########
# FRESH NAMES
# ###########

class NameSupply:
    """
    Produces the machine generated names "%0", "%1", ... of one reduction session. User programs cannot contain
    names with the "%" prefix, so these never capture a name of the program.

    CHANGELOG

    Added 03.10.2026
    """
    PREFIX = '%'

    def __init__(self, start: int = 0):
        self._counter = itertools.count(start)

    @classmethod
    def for_configuration(cls, *configurations: Configuration) -> 'NameSupply':
        """
        Creates a supply, which starts after the highest "%k" name already present in the given configurations.

        CHANGELOG

        Added 05.10.2026

        :param configurations:
        :return:
        """
        start = 0
        for configuration in configurations:
            for name in configuration.names:
                if name.startswith(cls.PREFIX) and name[1:].isdigit():
                    start = max(start, int(name[1:]) + 1)
        return cls(start)

    def fresh(self) -> Name:
        return Name('{}{}'.format(self.PREFIX, next(self._counter)))


def fresh_name(supply: NameSupply) -> Name:
    return supply.fresh()


# ##############
# ALPHA EQUALITY
# ##############

def _shape(term: Term) -> str:
    # The printed form with all the names blanked out
    if isinstance(term, Name):
        return '_'
    return '{}({})'.format(term.symbol, ','.join(_shape(arg) for arg in term.args))


def _equation_shape(equation: Equation) -> Tuple[str, str]:
    return tuple(sorted((_shape(equation.left), _shape(equation.right))))


class _AlphaMatcher:
    """
    Backtracking search for a bijection between the bound names of two configurations.
    """
    def __init__(self, first: Configuration, second: Configuration):
        self.first = first
        self.second = second
        # Free names are interface labels and have to map onto themselves
        self.forward = {name: name for name in first.free_names}
        self.backward = {name: name for name in second.free_names}
        self.trail: List[str] = []

    def bind(self, a: str, b: str) -> bool:
        if a in self.forward:
            return self.forward[a] == b
        if b in self.backward:
            return False
        self.forward[a] = b
        self.backward[b] = a
        self.trail.append(a)
        return True

    def undo(self, mark: int):
        while len(self.trail) > mark:
            a = self.trail.pop()
            del self.backward[self.forward.pop(a)]

    def match_term(self, a: Term, b: Term) -> bool:
        if isinstance(a, Name) and isinstance(b, Name):
            return self.bind(a.id, b.id)
        if isinstance(a, Agent) and isinstance(b, Agent):
            if a.symbol != b.symbol or len(a.args) != len(b.args):
                return False
            return all(self.match_term(x, y) for x, y in zip(a.args, b.args))
        return False

    def match_equations(self, index: int, used: List[bool]) -> bool:
        equations = self.first.equations
        if index == len(equations):
            return True

        equation = equations[index]
        shape = _equation_shape(equation)
        for position, candidate in enumerate(self.second.equations):
            if used[position] or _equation_shape(candidate) != shape:
                continue
            for left, right in ((candidate.left, candidate.right), (candidate.right, candidate.left)):
                mark = len(self.trail)
                if self.match_term(equation.left, left) and self.match_term(equation.right, right):
                    used[position] = True
                    if self.match_equations(index + 1, used):
                        return True
                    used[position] = False
                self.undo(mark)
        return False

    def run(self) -> bool:
        if len(self.first.head) != len(self.second.head):
            return False
        if len(self.first.equations) != len(self.second.equations):
            return False
        if set(self.first.free_names) != set(self.second.free_names):
            return False
        if sorted(map(_equation_shape, self.first.equations)) != sorted(map(_equation_shape, self.second.equations)):
            return False

        for a, b in zip(self.first.head, self.second.head):
            if not self.match_term(a, b):
                return False
        return self.match_equations(0, [False] * len(self.second.equations))


def alpha_equal(first: Configuration, second: Configuration) -> bool:
    """
    Whether the two configurations are equal up to a renaming of their bound names. The heads have to match in order,
    the equations as multisets with either orientation of each equation, and the free names have to be identical.

    CHANGELOG

    Added 04.10.2026

    :param first:
    :param second:
    :return:
    """
    return _AlphaMatcher(first, second).run()


# ##########
# VALIDATION
# ##########

@dataclass(frozen=True)
class Violation:
    where: str
    message: str

    def __str__(self):
        return '{}: {}'.format(self.where, self.message)


def term_violations(signature: Signature, term: Term, where: str) -> List[Violation]:
    violations = []
    for agent in iter_agents(term):
        if agent.symbol not in signature:
            violations.append(Violation(where, 'undeclared symbol "{}"'.format(agent.symbol)))
        elif len(agent.args) != signature.arity(agent.symbol):
            violations.append(Violation(where, 'symbol "{}" has arity {} but is applied to {} arguments'.format(
                agent.symbol, signature.arity(agent.symbol), len(agent.args)
            )))
    return violations


def rule_violations(signature: Signature, rule: Rule) -> List[Violation]:
    """
    Checks one rule: both symbols declared with matching arities, all argument terms well formed and every name
    occurring exactly twice.

    CHANGELOG

    Added 04.10.2026

    :param signature:
    :param rule:
    :return:
    """
    where = 'rule {}'.format(rule)
    violations = []
    for symbol, args in ((rule.left, rule.left_args), (rule.right, rule.right_args)):
        violations += term_violations(signature, Agent(symbol, args), where)

    wrong = [name for name, count in rule.names().items() if count != 2]
    if wrong:
        violations.append(Violation(where, 'names {} must occur exactly twice'.format(', '.join(wrong))))
    return violations


def configuration_violations(signature: Signature, configuration: Configuration) -> List[Violation]:
    where = 'configuration {}'.format(configuration)
    violations = []
    for term in configuration.terms():
        violations += term_violations(signature, term, where)
    for name, count in configuration.names.items():
        if count > 2:
            violations.append(Violation(where, 'name {} occurs {} times'.format(name, count)))
    return violations


def validate(signature: Signature, ruleset: RuleSet, configuration: Configuration) -> List[Violation]:
    """
    Checks the signature, every explicit rule of the rule set and the configuration. Returns the list of all the
    violations that were found, the list is empty for a valid triple.

    CHANGELOG

    Added 04.10.2026

    :param signature:
    :param ruleset:
    :param configuration:
    :return:
    """
    violations = [Violation('signature', message) for message in signature.violations()]
    for rule in ruleset:
        violations += rule_violations(signature, rule)
    violations += configuration_violations(signature, configuration)
    return violations
