# standard library imports
import io
import logging
import itertools
from collections import Counter
from dataclasses import dataclass, field

from typing import Dict, Iterable, List, Optional, Tuple

# third party imports
import parsimonious
from parsimonious.exceptions import ParseError

# package imports
from inetcalc import model
from inetcalc.model import Agent, Name, Equation, Configuration, Rule, RuleSet, Signature, SymbolInfo, Term
from inetcalc.model import InetError, Violation, PLAIN, iter_names, relabel, validate


logger = logging.getLogger(__name__)

# The names of the agents, which the numeral and the list sugar expand into
ZERO = 'Z'
SUCC = 'S'
DIFF = 'Diff'
CONS = 'Cons'

# ###################################
# DEFINING THE GRAMMAR OF .INET FILES
# ###################################

grammar = parsimonious.grammar.Grammar(r"""
    system              = ws declaration*
    declaration         = (agents / rules / net) ws
    agents              = "agents" ws "{" ws symbols? ws "}"
    symbols             = symbol (ws "," ws symbol)*
    symbol              = ident ws "/" ws natural attribute?
    attribute           = ws "@" ~"eraser|duplicator|amb"
    rules               = "rules" ws "{" ws rule* "}"
    rule                = side ws "><" ws side ws ";" ws
    side                = ident (ws "[" ws terms? ws "]")?
    net                 = "net" ws net_name ws "=" ws config
    config              = "<" ws terms? ws "|" ws equations? ws ">"
    equations           = equation (ws "," ws equation)*
    equation            = term ws "=" ws term
    terms               = term (ws "," ws term)*
    term                = numeral / dlist / agent / name
    agent               = ident (ws "(" ws terms ws ")")?
    dlist               = "[" ws terms? ws "]"
    numeral             = ~"#[0-9]+"
    ident               = ~"[A-Z][A-Za-z0-9_']*"
    name                = ~"%[0-9]+|%?[a-z][A-Za-z0-9_']*"
    net_name            = ~"[A-Za-z_][A-Za-z0-9_]*"
    natural             = ~"[0-9]+"
    ws                  = (~"\s+" / comment)*
    comment             = ~"#(?![0-9])[^\n]*"
    configuration_text  = ws config ws
    rule_text           = ws rule
    term_text           = ws term ws
""")

# The grammar is also used to parse single configurations, rules and terms
_grammars = {
    rule_name: grammar.default(rule_name)
    for rule_name in ('system', 'configuration_text', 'rule_text', 'term_text')
}


# ######
# ERRORS
# ######

@dataclass(frozen=True)
class Span:
    start: int
    end: int
    line: int
    column: int

    @classmethod
    def locate(cls, text: str, start: int, end: int) -> 'Span':
        line = text.count('\n', 0, start) + 1
        column = start - (text.rfind('\n', 0, start) + 1) + 1
        return cls(start, end, line, column)

    def __str__(self):
        return 'line {}, column {}'.format(self.line, self.column)


class InetSyntaxError(InetError):
    """
    Base class for all the errors of the textual format. Every error carries at least one source span, the line and
    column of the first one are also available as attributes.

    CHANGELOG

    Added 05.10.2026
    """
    def __init__(self, message: str, spans: Iterable[Span] = ()):
        self.message = message
        self.spans = list(spans)
        self.line = self.spans[0].line if self.spans else None
        self.column = self.spans[0].column if self.spans else None

        located = ' and '.join(str(span) for span in self.spans)
        super(InetSyntaxError, self).__init__('{} at {}'.format(message, located) if located else message)


class GrammarError(InetSyntaxError):
    pass


class UndeclaredSymbolError(InetSyntaxError):
    pass


class ArityError(InetSyntaxError):
    pass


class LinearityError(InetSyntaxError):
    pass


class ReservedNameError(InetSyntaxError):
    pass


class DuplicateRuleError(InetSyntaxError, model.DuplicateRuleError):
    pass


# ###########
# SYSTEM FILE
# ###########

@dataclass
class SystemFile:
    """
    The content of one .inet file: the signature, the rule set and the named nets in the order of their declaration.

    CHANGELOG

    Added 05.10.2026
    """
    signature: Signature
    rules: RuleSet
    nets: Dict[str, Configuration] = field(default_factory=dict)

    def net(self, name: Optional[str] = None) -> Configuration:
        """
        Returns the net with the given name or the first declared net, when no name is given.

        CHANGELOG

        Added 05.10.2026

        :raises InetError: if there is no such net
        :param name:
        :return:
        """
        if name is None:
            if not self.nets:
                raise InetError('the system does not declare any net')
            return next(iter(self.nets.values()))
        if name not in self.nets:
            raise InetError('there is no net "{}", the nets are: {}'.format(name, ', '.join(self.nets.keys())))
        return self.nets[name]

    def merge(self, other: 'SystemFile') -> 'SystemFile':
        nets = dict(self.nets)
        for name, configuration in other.nets.items():
            if name in nets and not model.alpha_equal(nets[name], configuration):
                raise InetError('the net "{}" is declared twice with different configurations'.format(name))
            nets[name] = configuration
        return SystemFile(self.signature.merge(other.signature), self.rules.merge(other.rules), nets)

    def validate(self) -> List[Violation]:
        configurations = list(self.nets.values()) or [Configuration()]
        violations = []
        for configuration in configurations:
            for violation in validate(self.signature, self.rules, configuration):
                if violation not in violations:
                    violations.append(violation)
        return violations


# #######################
# VISITING THE PARSE TREE
# #######################

@dataclass(frozen=True)
class _Use:
    # One occurrence of a name or of a symbol together with its argument count
    id: str
    count: int
    start: int
    end: int


class Visitor(parsimonious.nodes.NodeVisitor):
    """
    Turns the parse tree of the grammar into the model objects. The occurrences of names and symbols are recorded with
    their positions, so that the checks, which need the whole file, can still point at the source.

    CHANGELOG

    Added 05.10.2026
    """
    unwrapped_exceptions = (InetSyntaxError, )

    def __init__(self, text: str, allow_reserved: bool = False):
        self.text = text
        self.allow_reserved = allow_reserved

        self.declarations: List[Tuple[_Use, SymbolInfo]] = []
        self.rules: List[Tuple[Rule, Span, List[_Use]]] = []
        self.nets: List[Tuple[str, Configuration, Span, List[_Use]]] = []

        self._names: List[_Use] = []
        self._symbols: List[_Use] = []
        self._holes = itertools.count()

    def span(self, start: int, end: int) -> Span:
        return Span.locate(self.text, start, end)

    def generic_visit(self, node, children):
        return children if children else None

    # -- tokens

    def visit_ident(self, node, children):
        return node.text

    def visit_net_name(self, node, children):
        return node.text

    def visit_natural(self, node, children):
        return int(node.text)

    def visit_attribute(self, node, children):
        return node.text.strip()[1:]

    def visit_name(self, node, children):
        if node.text.startswith('%') and not self.allow_reserved:
            raise ReservedNameError(
                'the name "{}" uses the reserved prefix "%"'.format(node.text),
                [self.span(node.start, node.end)]
            )
        self._names.append(_Use(node.text, 1, node.start, node.end))
        return Name(node.text)

    # -- terms

    def visit_numeral(self, node, children):
        self._symbols.append(_Use(ZERO, 0, node.start, node.end))
        term = Agent(ZERO)
        for _ in range(int(node.text[1:])):
            self._symbols.append(_Use(SUCC, 1, node.start, node.end))
            term = Agent(SUCC, (term, ))
        return term

    def visit_dlist(self, node, children):
        _, _, items, _, _ = children
        # The hole gets its real name, once all the names of the enclosing rule or configuration are known
        hole = Name('?{}'.format(next(self._holes)))
        term = hole
        for item in reversed(items[0] if items else []):
            self._symbols.append(_Use(CONS, 2, node.start, node.end))
            term = Agent(CONS, (item, term))
        self._symbols.append(_Use(DIFF, 2, node.start, node.end))
        return Agent(DIFF, (term, hole))

    def visit_agent(self, node, children):
        symbol, arguments = children
        args = arguments[0][3] if arguments else []
        self._symbols.append(_Use(symbol, len(args), node.start, node.end))
        return Agent(symbol, tuple(args))

    def visit_term(self, node, children):
        return children[0]

    def visit_terms(self, node, children):
        first, rest = children
        return [first] + [item[3] for item in (rest or [])]

    def visit_equation(self, node, children):
        left, _, _, _, right = children
        return Equation(left, right)

    def visit_equations(self, node, children):
        first, rest = children
        return [first] + [item[3] for item in (rest or [])]

    # -- configurations and rules

    def _take_uses(self) -> Tuple[List[_Use], List[_Use]]:
        names, symbols = self._names, self._symbols
        self._names, self._symbols = [], []
        return names, symbols

    def _linearity_error(self, message: str, names: List[_Use], wrong: List[str]) -> LinearityError:
        spans = [self.span(use.start, use.end) for use in names if use.id in wrong]
        return LinearityError(message.format(', '.join(wrong)), spans)

    def visit_config(self, node, children):
        _, _, head, _, _, _, equations, _, _ = children
        names, symbols = self._take_uses()

        counter = Counter(use.id for use in names)
        wrong = [name for name, count in counter.items() if count > 2]
        if wrong:
            raise self._linearity_error('the names {} occur more than twice', names, wrong)

        head = head[0] if head else []
        equations = equations[0] if equations else []
        mapping = _hole_names(itertools.chain(head, *(equation.sides for equation in equations)), counter)
        configuration = Configuration(
            tuple(relabel(term, mapping) for term in head),
            tuple(Equation(relabel(eq.left, mapping), relabel(eq.right, mapping)) for eq in equations)
        )
        return configuration, symbols

    def visit_side(self, node, children):
        symbol, arguments = children
        args = (arguments[0][3] or [[]])[0] if arguments else []
        self._symbols.append(_Use(symbol, len(args), node.start, node.start + len(symbol)))
        return symbol, args

    def visit_rule(self, node, children):
        (left, left_args), _, _, _, (right, right_args), _, _, _ = children
        names, symbols = self._take_uses()

        counter = Counter(use.id for use in names)
        wrong = [name for name, count in counter.items() if count != 2]
        if wrong:
            raise self._linearity_error('the names {} of the rule must occur exactly twice', names, wrong)

        mapping = _hole_names(itertools.chain(left_args, right_args), counter)
        rule = Rule(
            left,
            right,
            tuple(relabel(term, mapping) for term in left_args),
            tuple(relabel(term, mapping) for term in right_args)
        )
        self.rules.append((rule, self.span(node.start, node.end), symbols))
        return rule

    # -- declarations

    def visit_symbol(self, node, children):
        symbol, _, _, _, arity, attribute = children
        info = SymbolInfo(arity, attribute[0] if attribute else PLAIN)
        self.declarations.append((_Use(symbol, arity, node.start, node.end), info))
        return symbol

    def visit_net(self, node, children):
        _, _, name, _, _, _, (configuration, symbols) = children
        self.nets.append((name, configuration, self.span(node.start, node.end), symbols))
        return name

    def visit_configuration_text(self, node, children):
        return children[1]

    def visit_rule_text(self, node, children):
        return children[1]

    def visit_term_text(self, node, children):
        names, symbols = self._take_uses()
        term = children[1]
        return relabel(term, _hole_names([term], Counter(use.id for use in names))), symbols


def _hole_names(terms: Iterable[Term], used: Iterable[str]) -> Dict[str, str]:
    """
    Maps the placeholder names of the list holes to fresh names "h0", "h1", ..., which do not clash with the names
    already used.

    CHANGELOG

    Added 06.10.2026

    :param terms:
    :param used:
    :return:
    """
    used = set(used)
    candidates = ('h{}'.format(index) for index in itertools.count())
    mapping = {}
    for term in terms:
        for name in iter_names(term):
            if name.startswith('?') and name not in mapping:
                mapping[name] = next(candidate for candidate in candidates if candidate not in used)
    return mapping


# ##########################
# CHECKING AGAINST SIGNATURE
# ##########################

def _check_symbols(visitor: Visitor, signature: Signature, uses: Iterable[_Use]):
    for use in uses:
        span = visitor.span(use.start, use.end)
        if use.id not in signature:
            raise UndeclaredSymbolError('the symbol "{}" is not declared'.format(use.id), [span])
        if signature.arity(use.id) != use.count:
            raise ArityError('the symbol "{}" has arity {} but got {} arguments'.format(
                use.id, signature.arity(use.id), use.count
            ), [span])


def _signature(visitor: Visitor) -> Signature:
    symbols = {}
    for use, info in visitor.declarations:
        if use.id in symbols and symbols[use.id] != info:
            raise GrammarError('the symbol "{}" is declared twice'.format(use.id), [visitor.span(use.start, use.end)])
        symbols[use.id] = info

    signature = Signature(symbols)
    messages = signature.violations()
    if messages:
        use, _ = visitor.declarations[0]
        raise GrammarError('; '.join(messages), [visitor.span(use.start, use.end)])
    return signature


def _parse(text: str, rule_name: str, allow_reserved: bool):
    visitor = Visitor(text, allow_reserved=allow_reserved)
    try:
        tree = _grammars[rule_name].parse(text)
    except ParseError as error:
        excerpt = text[error.pos:error.pos + 12].split('\n')[0]
        raise GrammarError(
            'syntax error near "{}"'.format(excerpt) if excerpt else 'unexpected end of input',
            [Span.locate(text, error.pos, error.pos + 1)]
        )
    return visitor, visitor.visit(tree)


# ##############
# THE PUBLIC API
# ##############

def parse_system(text: str, allow_reserved: bool = False) -> SystemFile:
    """
    Parses the text of a whole .inet file into a SystemFile.

    Besides the grammar, this checks that every symbol is declared and applied to the right number of arguments, that
    the rules and the nets are linear and that there is at most one rule per unordered pair of symbols.

    CHANGELOG

    Added 05.10.2026

    :raises InetSyntaxError: a subclass describing the first problem found, with its source spans
    :param text:
    :param allow_reserved: whether the machine generated "%" names are accepted
    :return:
    """
    visitor, _ = _parse(text, 'system', allow_reserved)
    signature = _signature(visitor)

    ruleset = RuleSet(signature)
    spans: Dict[Tuple[str, str], Span] = {}
    for rule, span, symbols in visitor.rules:
        _check_symbols(visitor, signature, symbols)
        if rule.key in spans:
            raise DuplicateRuleError('there are two rules for {} >< {}'.format(*rule.key), [spans[rule.key], span])
        spans[rule.key] = span
        ruleset.add(rule)

    nets = {}
    for name, configuration, span, symbols in visitor.nets:
        _check_symbols(visitor, signature, symbols)
        if name in nets:
            raise GrammarError('the net "{}" is declared twice'.format(name), [span])
        nets[name] = configuration

    logger.debug('parsed %d symbols, %d rules and %d nets', len(signature), len(ruleset), len(nets))
    return SystemFile(signature, ruleset, nets)


def parse_configuration(text: str,
                        signature: Optional[Signature] = None,
                        allow_reserved: bool = False) -> Configuration:
    """
    Parses a single configuration "< head | equations >". The symbols are only checked, when a signature is given.

    CHANGELOG

    Added 05.10.2026

    :param text:
    :param signature:
    :param allow_reserved:
    :return:
    """
    visitor, (configuration, symbols) = _parse(text, 'configuration_text', allow_reserved)
    if signature is not None:
        _check_symbols(visitor, signature, symbols)
    return configuration


def parse_rule(text: str, signature: Optional[Signature] = None) -> Rule:
    # The closing ";" is optional for a single rule
    if not text.rstrip().endswith(';'):
        text = text.rstrip() + ';'
    visitor, rule = _parse(text, 'rule_text', False)
    if signature is not None:
        _check_symbols(visitor, signature, visitor.rules[0][2])
    return rule


def parse_term(text: str, signature: Optional[Signature] = None, allow_reserved: bool = False) -> Term:
    visitor, (term, symbols) = _parse(text, 'term_text', allow_reserved)
    if signature is not None:
        _check_symbols(visitor, signature, symbols)
    return term


def load_system(path: str) -> SystemFile:
    with io.open(path, mode='r', encoding='utf-8') as file:
        return parse_system(file.read())


# ########
# PRINTING
# ########

def print_configuration(configuration: Configuration) -> str:
    return str(configuration)


def print_system(system: SystemFile) -> str:
    """
    Prints the system in the canonical textual format. Only the explicit rules are printed, the schema rules follow
    from the attributes of the symbols.

    CHANGELOG

    Added 05.10.2026

    :param system:
    :return:
    """
    declarations = []
    for symbol, info in system.signature.items():
        attribute = '' if info.attribute == PLAIN else ' @{}'.format(info.attribute)
        declarations.append('    {}/{}{}'.format(symbol, info.arity, attribute))

    lines = ['agents {', ',\n'.join(declarations), '}', 'rules {']
    lines += ['    {};'.format(rule) for rule in system.rules]
    lines.append('}')
    lines += ['net {} = {}'.format(name, configuration) for name, configuration in system.nets.items()]
    return '\n'.join(line for line in lines if line) + '\n'
