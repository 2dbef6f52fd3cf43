"""
Hypothesis strategies for random, linear terms, configurations and systems over a small signature.
"""
# standard library imports
import itertools

from typing import List, Optional, Sequence

# third party imports
from hypothesis import strategies

# package imports
from inetcalc.model import Agent, Name, Equation, Configuration, Rule, RuleSet, Signature, Term, rule_key
from inetcalc.calculus import reduce
from inetcalc.parser import SystemFile


SIGNATURE = Signature.from_arities(Z=0, S=1, P=2, Q=3)

# A shape is a term without names: None marks a leaf, which gets a name later
shapes = strategies.recursive(
    strategies.just(None) | strategies.just(('Z', )),
    lambda children: strategies.one_of(
        strategies.tuples(strategies.just('S'), children),
        strategies.tuples(strategies.just('P'), children, children),
        strategies.tuples(strategies.just('Q'), children, children, children)
    ),
    max_leaves=6
)


def count_leaves(shape) -> int:
    if shape is None:
        return 1
    return sum(count_leaves(child) for child in shape[1:])


def fill(shape, leaves: List[Term]) -> Term:
    # Consumes the leaf terms from the front of the list
    if shape is None:
        return leaves.pop(0)
    return Agent(shape[0], tuple(fill(child, leaves) for child in shape[1:]))


def draw_leaves(draw, count: int, special: Sequence[str] = (), prefix: str = 'a', bound: bool = True,
                even: bool = False) -> List[Term]:
    """
    Draws the names for "count" leaves: the special names once each at random positions, the other positions either
    paired up into bound names or as free names.
    """
    positions = draw(strategies.permutations(list(range(count))))
    leaves: List[Optional[Term]] = [None] * count

    for name, position in zip(special, positions):
        leaves[position] = Name(name)
    rest = positions[len(special):]

    pairs = draw(strategies.integers(0, len(rest) // 2)) if bound else 0
    if even:
        pairs = len(rest) // 2
    counter = itertools.count()
    for index in range(pairs):
        name = Name('{}{}'.format(prefix, next(counter)))
        leaves[rest[2 * index]] = name
        leaves[rest[2 * index + 1]] = name
    for position in rest[2 * pairs:]:
        leaves[position] = Agent('Z') if even else Name('{}{}'.format(prefix, next(counter)))
    return leaves


@strategies.composite
def terms(draw, special: Sequence[str] = (), prefix: str = 'a'):
    # A linear term with every special name exactly once; the other names are distinct from each other
    shape = ('P', ('P', None, None), draw(shapes))
    while count_leaves(shape) < len(special):
        shape = ('P', None, shape)
    leaves = draw_leaves(draw, count_leaves(shape), special, prefix, bound=False)
    return fill(shape, leaves)


@strategies.composite
def configurations(draw, agent_sides: bool = False):
    """
    Random configurations, where every name occurs at most twice. With "agent_sides" every equation has an agent on
    at least one side.
    """
    head = draw(strategies.lists(shapes, max_size=3))
    equations = draw(strategies.lists(strategies.tuples(shapes, shapes), max_size=4))
    if agent_sides:
        equations = [(left if left is not None else ('Z', ), right) for left, right in equations]

    count = sum(map(count_leaves, head)) + sum(count_leaves(left) + count_leaves(right) for left, right in equations)
    leaves = draw_leaves(draw, count, prefix='n')

    head_terms = tuple(fill(shape, leaves) for shape in head)
    equation_terms = tuple(Equation(fill(left, leaves), fill(right, leaves)) for left, right in equations)
    return Configuration(head_terms, equation_terms)


def administrative_normal_form(configuration: Configuration) -> Configuration:
    """
    Applies all the indirections and collects, which are possible without any rule. The result has no equation with
    a bound name on one side, except for cyclic trees.
    """
    return reduce(configuration, RuleSet(SIGNATURE)).configuration


@strategies.composite
def rules(draw, left: str, right: str):
    arities = [SIGNATURE.arity(left), SIGNATURE.arity(right)]
    args = [draw(strategies.lists(shapes, min_size=arity, max_size=arity)) for arity in arities]
    count = sum(count_leaves(shape) for shape in args[0] + args[1])
    leaves = draw_leaves(draw, count, prefix='x', even=True)
    return Rule(left, right, tuple(fill(shape, leaves) for shape in args[0]),
                tuple(fill(shape, leaves) for shape in args[1]))


@strategies.composite
def systems(draw):
    keys = sorted(set(rule_key(a, b) for a, b in itertools.combinations_with_replacement(SIGNATURE, 2)))
    chosen = draw(strategies.lists(strategies.sampled_from(keys), unique=True, max_size=4))
    ruleset = RuleSet(SIGNATURE, [draw(rules(a, b)) for a, b in chosen])
    nets = {'net{}'.format(index): configuration
            for index, configuration in enumerate(draw(strategies.lists(configurations(), max_size=2)))}
    return SystemFile(SIGNATURE, ruleset, nets)


def signature_shapes(signature: Signature, max_leaves: int = 4):
    # Shapes over the symbols of any signature, with every agent given exactly its arity
    nullary = sorted(symbol for symbol in signature if signature.arity(symbol) == 0)
    others = sorted(symbol for symbol in signature if signature.arity(symbol) > 0)
    return strategies.recursive(
        strategies.just(None) | strategies.sampled_from([(symbol, ) for symbol in nullary]),
        lambda children: strategies.sampled_from(others).flatmap(
            lambda symbol: strategies.tuples(strategies.just(symbol), *[children] * signature.arity(symbol))
        ),
        max_leaves=max_leaves
    )


@strategies.composite
def signature_configurations(draw, signature: Signature, max_equations: int = 6):
    """
    Well formed configurations over the given signature with at most "max_equations" equations. Every bound name
    occurs exactly twice and the free names once.
    """
    shapes_of_signature = signature_shapes(signature)
    head = draw(strategies.lists(shapes_of_signature, max_size=2))
    equations = draw(strategies.lists(strategies.tuples(shapes_of_signature, shapes_of_signature),
                                      min_size=1, max_size=max_equations))

    count = sum(map(count_leaves, head)) + sum(count_leaves(left) + count_leaves(right) for left, right in equations)
    leaves = draw_leaves(draw, count, prefix='n')

    head_terms = tuple(fill(shape, leaves) for shape in head)
    equation_terms = tuple(Equation(fill(left, leaves), fill(right, leaves)) for left, right in equations)
    return Configuration(head_terms, equation_terms)
